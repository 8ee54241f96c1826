"""Evaluation harness: per-query retrieval metrics and the experiment grid.

Metric definitions:

* precision@k counts ground-truth hits among the top min(k, returned)
  suggestions and always divides by k.
* accuracy is the mean precision at the largest evaluated k (so the
  accuracy column always equals the AP@k_max column).
* recall divides hits anywhere in the suggestion list by the synonym count.
* F1 is macro averaged: the harmonic mean of precision@k_max and recall is
  taken per query, then averaged (zero when both are zero).
* Uncovered queries (no suggestions) contribute zero to every average by
  default; ``exclude_uncovered`` restricts the averages to covered queries.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .namegraph import NameGraph, build_name_graph_from_counts
from .phonetic import PhoneticAlgorithm, Unencodable, build_code_index, parse_algorithm
from .records import GroundTruthEntry, ProfileRecord
from .strsim import EditDistanceRange, edit_distance_at_most
from .suggest import (
    OrderingFunction,
    graft_suggest,
    hgraft_suggest,
    parse_function,
    phonetic_retrieve,
    string_sim_retrieve,
)
from .treegraph import RelationKind, ancestor_name_pairs, build_tree, parse_relation, vocabulary_of

AP_KS = (1, 2, 3, 5, 10)


@dataclass(frozen=True, slots=True)
class QueryResult:
    query: str
    suggested: tuple[str, ...]
    relevant: frozenset[str]

    @property
    def covered(self) -> bool:
        return len(self.suggested) > 0


def precision_at_k(result: QueryResult, k: int) -> float:
    """Hits among the top min(k, |suggested|) suggestions, divided by k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not result.suggested:
        return 0.0
    hits = sum(1 for name in result.suggested[:k] if name in result.relevant)
    return hits / k


def recall_of(result: QueryResult) -> float:
    if not result.relevant:
        raise ValueError("recall needs a non-empty relevant set")
    hits = sum(1 for name in result.suggested if name in result.relevant)
    return hits / len(result.relevant)


def _f1(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


@dataclass(slots=True)
class ReportRow:
    method: str
    accuracy: float
    f1: float
    ap_at: dict[int, float]
    recall: float
    covered_count: int
    covered_pct: float
    wall_time_seconds: float
    query_count: int
    labels: dict[str, str] = field(default_factory=dict)


Suggester = Callable[[str], Sequence[object]]


def _suggested_names(raw: Sequence[object], k: int) -> tuple[str, ...]:
    names = [getattr(item, "name", item) for item in raw[:k]]
    return tuple(str(n) for n in names)


def evaluate_method(
    suggester: Suggester,
    ground_truth: Sequence[GroundTruthEntry],
    k: int = 10,
    method: str = "",
    exclude_uncovered: bool = False,
    labels: dict[str, str] | None = None,
) -> ReportRow:
    """Run the suggester over every ground-truth query and macro-average."""
    if k < 1:
        raise ValueError("k must be >= 1")
    entries = sorted(ground_truth, key=lambda e: e.query_name)
    started = time.perf_counter()
    results = [
        QueryResult(
            query=entry.query_name,
            suggested=_suggested_names(suggester(entry.query_name), k),
            relevant=entry.synonyms,
        )
        for entry in entries
    ]
    elapsed = time.perf_counter() - started

    covered = sum(1 for r in results if r.covered)
    scored = [r for r in results if r.covered] if exclude_uncovered else results
    denominator = len(scored)

    def mean(values: Iterable[float]) -> float:
        if denominator == 0:
            return 0.0
        return sum(values) / denominator

    ks = sorted(set(AP_KS) | {k})
    ap_at = {kk: mean(precision_at_k(r, kk) for r in scored) for kk in ks}
    recall = mean(recall_of(r) for r in scored)
    f1 = mean(_f1(precision_at_k(r, k), recall_of(r)) for r in scored)
    return ReportRow(
        method=method,
        accuracy=ap_at[k],
        f1=f1,
        ap_at=ap_at,
        recall=recall,
        covered_count=covered,
        covered_pct=covered / len(results) if results else 0.0,
        wall_time_seconds=elapsed,
        query_count=len(results),
        labels=dict(labels or {}),
    )


REPORT_COLUMNS = (
    "method",
    "accuracy",
    "f1",
    "ap@1",
    "ap@2",
    "ap@3",
    "ap@5",
    "ap@10",
    "recall",
    "time_sec",
    "cover",
    "cover_pct",
)


def report_to_tsv(rows: Sequence[ReportRow], label_columns: Sequence[str] = ()) -> str:
    """Fixed column order, 4-decimal metric rounding; diff-stable output."""
    header = list(label_columns) + list(REPORT_COLUMNS)
    lines = ["\t".join(header)]
    for row in rows:
        cells = [row.labels.get(col, "") for col in label_columns]
        cells.append(row.method)
        cells.append(f"{row.accuracy:.4f}")
        cells.append(f"{row.f1:.4f}")
        for kk in AP_KS:
            cells.append(f"{row.ap_at.get(kk, 0.0):.4f}")
        cells.append(f"{row.recall:.4f}")
        cells.append(f"{row.wall_time_seconds:.3f}")
        cells.append(str(row.covered_count))
        cells.append(f"{row.covered_pct:.4f}")
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


PHONETIC_METHODS = ("soundex", "metaphone", "dmetaphone", "nysiis", "mra")
STRING_METHODS = ("ed", "dld", "jw")
ALL_METHODS = ("graft", "hgraft") + PHONETIC_METHODS + STRING_METHODS


def default_fallback(graph: NameGraph) -> PhoneticAlgorithm:
    """Double Metaphone for forename graphs, NYSIIS for surname graphs."""
    if graph.meta.get("name_view") == "surname":
        return PhoneticAlgorithm.NYSIIS
    return PhoneticAlgorithm.DOUBLE_METAPHONE


def make_suggester(
    graph: NameGraph,
    method: str,
    k: int = 10,
    depth: int = 2,
    function: OrderingFunction | str = OrderingFunction.NET_ED_OF_DMPHONE_ED,
    fallback: PhoneticAlgorithm | str | None = None,
) -> Suggester:
    """Bind one named method (graft/hgraft/phonetic/string baseline) to a
    built graph; baselines draw candidates from the graph's vocabulary."""
    method = method.strip().lower()
    function = parse_function(function)
    if method == "graft":
        return lambda q: graft_suggest(graph, q, k=k, depth=depth, function=function)
    if method == "hgraft":
        algorithm = parse_algorithm(fallback) if fallback else default_fallback(graph)
        index = build_code_index(graph.vocabulary, algorithm)
        return lambda q: hgraft_suggest(graph, index, q, k=k, depth=depth, function=function)
    if method in PHONETIC_METHODS:
        index = build_code_index(graph.vocabulary, parse_algorithm(method))

        def phonetic_suggester(q: str) -> Sequence[object]:
            try:
                return phonetic_retrieve(index, q, k=k)
            except Unencodable:
                return []

        return phonetic_suggester
    if method in STRING_METHODS:
        corpus = graph.vocabulary
        return lambda q: string_sim_retrieve(corpus, q, metric=method, k=k)
    raise ValueError(f"unknown evaluation method: {method!r}")


GRID_RELATIONS = (
    RelationKind.PARENT_CHILD,
    RelationKind.GRANDPARENT_GRANDCHILD,
    RelationKind.GREATGRANDPARENT_GREATGRANDCHILD,
    RelationKind.ALL_ANCESTORS,
)
GRID_ED_HIS = (2, 3, 4, 5)
GRID_FUNCTIONS = (
    OrderingFunction.NET_ED,
    OrderingFunction.NET2_ED,
    OrderingFunction.ED_OF_DMPHONE,
    OrderingFunction.NET_ED_OF_DMPHONE_ED,
)


def run_experiment_grid(
    profiles: Sequence[ProfileRecord],
    ground_truth: Sequence[GroundTruthEntry],
    relations: Sequence[RelationKind | str] = GRID_RELATIONS,
    ed_his: Sequence[int] = GRID_ED_HIS,
    functions: Sequence[OrderingFunction | str] = GRID_FUNCTIONS,
    name_view: str = "forename",
    depth: int = 2,
    k: int = 10,
) -> list[ReportRow]:
    """One graph per (relation, [1, hi]) cell, one row per ordering function.

    The default 4 x 4 x 4 grid yields 64 rows in deterministic order.
    """
    relations = [parse_relation(r) for r in relations]
    functions = [parse_function(f) for f in functions]
    if not relations or not ed_his or not functions:
        raise ValueError("grid axes must be non-empty")
    tree = build_tree(profiles, name_view)
    vocabulary = vocabulary_of(profiles, name_view)
    max_hi = max(ed_his)
    rows: list[ReportRow] = []
    for relation in relations:
        pair_counts = Counter(ancestor_name_pairs(tree, relation))
        # Distances computed once per distinct pair at the widest bound,
        # then reused for every narrower range of this relation.
        distances: dict[tuple[str, str], int | None] = {}
        for a, d in pair_counts:
            key = (a, d) if a <= d else (d, a)
            if key not in distances:
                distances[key] = edit_distance_at_most(key[0], key[1], max_hi)
        for hi in sorted(ed_his):
            ed_range = EditDistanceRange(1, hi)
            in_range: dict[tuple[str, str], int] = {}
            for pair, count in pair_counts.items():
                a, d = pair
                if a == d:
                    continue
                dist = distances[(a, d) if a <= d else (d, a)]
                if dist is not None and dist <= hi:
                    in_range[pair] = count
            graph = build_name_graph_from_counts(in_range, ed_range, vocabulary)
            for function in functions:
                row = evaluate_method(
                    lambda q, g=graph, fn=function: graft_suggest(g, q, k=k, depth=depth, function=fn),
                    ground_truth,
                    k=k,
                    method="graft",
                    labels={
                        "relation": relation.value,
                        "ed_lo": "1",
                        "ed_hi": str(hi),
                        "function": function.value,
                    },
                )
                rows.append(row)
    return rows
