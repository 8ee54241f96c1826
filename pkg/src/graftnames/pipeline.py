"""End-to-end build composition: ingest -> normalize -> tree -> name graph.

Build once, query many: the expensive graph construction persists to a
versioned file, and suggestion/evaluation stages reload it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .ingest import load_profiles
from .namegraph import NameGraph, build_name_graph
from .normalize import DEFAULT_CONFIG, NormalizationConfig, NormalizationStats, normalize_profiles
from .phonetic import PhoneticAlgorithm
from .records import ProfileRecord, RawProfile
from .strsim import EditDistanceRange
from .suggest import OrderingFunction
from .treegraph import (
    FamilyTreeGraph,
    RelationKind,
    ancestor_name_pairs,
    build_tree,
    vocabulary_of,
)


@dataclass(slots=True)
class PipelineConfig:
    name_view: str = "forename"
    relation: RelationKind = RelationKind.PARENT_CHILD
    ed_range: EditDistanceRange = field(default_factory=lambda: EditDistanceRange(1, 3))
    depth: int = 2
    k: int = 10
    function: OrderingFunction = OrderingFunction.NET_ED_OF_DMPHONE_ED
    hybrid: bool = False
    fallback: PhoneticAlgorithm = PhoneticAlgorithm.DOUBLE_METAPHONE
    normalization: NormalizationConfig = DEFAULT_CONFIG

    def __post_init__(self) -> None:
        if self.name_view not in ("forename", "surname"):
            raise ValueError(f"unknown name view: {self.name_view!r}")
        if self.depth < 1 or self.k < 1:
            raise ValueError("depth and k must be >= 1")


@dataclass(slots=True)
class BuildResult:
    records: list[ProfileRecord]
    normalization: NormalizationStats
    tree: FamilyTreeGraph
    graph: NameGraph


def build_graph_from_records(records: Sequence[ProfileRecord], config: PipelineConfig) -> tuple[FamilyTreeGraph, NameGraph]:
    tree = build_tree(records, config.name_view)
    vocabulary = vocabulary_of(records, config.name_view)
    graph = build_name_graph(
        ancestor_name_pairs(tree, config.relation),
        config.ed_range,
        vocabulary,
        meta={
            "name_view": config.name_view,
            "relation": config.relation.value,
        },
    )
    return tree, graph


def build_from_raw(profiles: Sequence[RawProfile], config: PipelineConfig) -> BuildResult:
    records, stats = normalize_profiles(profiles, config.normalization)
    tree, graph = build_graph_from_records(records, config)
    return BuildResult(records=records, normalization=stats, tree=tree, graph=graph)


def build_from_file(path: str | Path, config: PipelineConfig, format: str = "tsv") -> BuildResult:
    return build_from_raw(load_profiles(path, format=format), config)


def load_config_file(path: str | Path) -> dict[str, str]:
    """Plain ``key = value`` config lines; '#' starts a comment."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_number}: expected 'key = value'")
            key, value = line.split("=", 1)
            values[key.strip().lower()] = value.strip()
    return values
