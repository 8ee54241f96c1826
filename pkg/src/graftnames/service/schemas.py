"""Request/response models for the HTTP service.

Wire-level enum spellings match the CLI flags (dmetaphone, neted, ...);
parsing into the core enums happens at the endpoint boundary.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

NameView = Literal["forename", "surname"]
Relation = Literal[
    "parent_child",
    "grandparent_grandchild",
    "greatgrandparent_greatgrandchild",
    "all_ancestors",
]
Function = Literal["neted", "net2ed", "edofdmphone", "netedofdmphoneed"]
Algorithm = Literal["soundex", "metaphone", "dmetaphone", "nysiis", "mra"]
Metric = Literal["ed", "dld", "jw"]
Method = Literal[
    "graft", "hgraft",
    "soundex", "metaphone", "dmetaphone", "nysiis", "mra",
    "ed", "dld", "jw",
]
FileFormat = Literal["tsv", "csv"]


class NormalizationOptions(BaseModel):
    min_name_length: int = Field(default=2, ge=1)
    prefixes: list[str] | None = None
    honorifics: list[str] | None = None
    case_fold: bool = True


class HealthResponse(BaseModel):
    status: str
    version: str


class DistanceRequest(BaseModel):
    metric: Metric
    a: str
    b: str


class DistanceResponse(BaseModel):
    metric: Metric
    a: str
    b: str
    value: float


class PhoneticRequest(BaseModel):
    algorithm: Algorithm
    name: str


class PhoneticResponse(BaseModel):
    algorithm: Algorithm
    name: str
    primary: str
    secondary: str | None = None


class BuildRequest(BaseModel):
    profiles_path: str
    output_path: str
    format: FileFormat = "tsv"
    name_view: NameView = "forename"
    relation: Relation = "parent_child"
    ed_lo: int = 1
    ed_hi: int = 3
    normalization: NormalizationOptions = Field(default_factory=NormalizationOptions)


class TreeStats(BaseModel):
    vertices: int
    edges: int
    components: int
    dangling_parent_refs: int
    self_references: int
    duplicate_parent_links: int
    cycle_vertex_count: int


class GraphStats(BaseModel):
    vertices: int
    non_isolated: int
    edges: int
    components: int


class NormalizationCounters(BaseModel):
    honorifics_stripped: int
    prefixes_stripped: int
    short_tokens_dropped: int
    names_dropped: int


class BuildResponse(BaseModel):
    output_path: str
    profiles_read: int
    normalization: NormalizationCounters
    tree: TreeStats
    graph: GraphStats


class SuggestRequest(BaseModel):
    graph_path: str
    queries: list[str] = Field(min_length=1)
    k: int = Field(default=10, ge=1)
    depth: int = Field(default=2, ge=1)
    function: Function = "netedofdmphoneed"
    hybrid: bool = False
    fallback: Algorithm | None = None


class SuggestionItem(BaseModel):
    rank: int
    name: str
    score: float
    hop: int | None
    edit_distance: int
    source: str


class SuggestBlock(BaseModel):
    query: str
    suggestions: list[SuggestionItem]


class SuggestResponse(BaseModel):
    blocks: list[SuggestBlock]


class ReportRowModel(BaseModel):
    method: str
    accuracy: float
    f1: float
    ap_at: dict[int, float]
    recall: float
    covered_count: int
    covered_pct: float
    wall_time_seconds: float
    query_count: int
    labels: dict[str, str] = Field(default_factory=dict)


class EvaluateRequest(BaseModel):
    graph_path: str
    ground_truth_path: str
    method: Method = "graft"
    k: int = Field(default=10, ge=1)
    depth: int = Field(default=2, ge=1)
    function: Function = "netedofdmphoneed"
    fallback: Algorithm | None = None
    exclude_uncovered: bool = False
    normalization: NormalizationOptions = Field(default_factory=NormalizationOptions)
    output_path: str | None = None


class EvaluateResponse(BaseModel):
    row: ReportRowModel
    tsv: str
    output_path: str | None = None


class GridRequest(BaseModel):
    profiles_path: str
    ground_truth_path: str
    format: FileFormat = "tsv"
    name_view: NameView = "forename"
    relations: list[Relation] | None = None
    ed_his: list[int] | None = None
    functions: list[Function] | None = None
    k: int = Field(default=10, ge=1)
    depth: int = Field(default=2, ge=1)
    normalization: NormalizationOptions = Field(default_factory=NormalizationOptions)
    output_path: str | None = None


class GridResponse(BaseModel):
    rows: list[ReportRowModel]
    tsv: str
    output_path: str | None = None


class SynthRequest(BaseModel):
    seed: int = 42
    families: int = Field(default=200, ge=1)
    generations: int = Field(default=4, ge=2)
    variant_rate: float = Field(default=0.5, gt=0, le=1)
    profiles_path: str
    ground_truth_path: str


class SynthResponse(BaseModel):
    profiles_path: str
    ground_truth_path: str
    profiles_written: int
    ground_truth_pairs: int
    queries: int


class TreeStatsRequest(BaseModel):
    profiles_path: str
    format: FileFormat = "tsv"
    name_view: NameView = "forename"
    normalization: NormalizationOptions = Field(default_factory=NormalizationOptions)


class TreeStatsResponse(BaseModel):
    tree: TreeStats
    normalization: NormalizationCounters
    profiles_read: int


class GraphStatsRequest(BaseModel):
    graph_paths: list[str] = Field(min_length=1)


class GraphSizeRowModel(BaseModel):
    graph_path: str
    relation: str
    ed_range: str
    vertices: int
    non_isolated: int
    edges: int
    components: int


class GraphStatsResponse(BaseModel):
    rows: list[GraphSizeRowModel]


class ErrorPayload(BaseModel):
    kind: Literal["usage_error", "data_error"]
    error: str
    message: str
