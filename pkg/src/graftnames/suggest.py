"""Candidate ranking: graph suggestion, the phonetic-fallback hybrid, and the
phonetic / string-similarity baseline retrievers.

Scores are exact rationals built from integer hop counts, edit distances,
and phonetic code distances, so rankings never depend on float rounding.
Four ordering functions are supported:

    net_ed                 1 / (SP * ED)
    net2_ed                1 / (SP^2 * ED)
    ed_of_dmphone          1 / max(minDM, 1/2)
    net_ed_of_dmphone_ed   1 / (SP * ED * max(minDM, 1/2))

where SP is the BFS hop count, ED the edit distance between the names, and
minDM the minimum edit distance over all Double Metaphone code pairs of the
two names. minDM = 0 (identical sound) would divide by zero; 1/2 keeps the
score finite while still ranking identical-sounding candidates strictly
above minDM = 1 ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .namegraph import NameGraph, neighbors_within
from .phonetic import CodeIndex, Unencodable, encode, PhoneticAlgorithm
from .strsim import damerau_levenshtein, edit_distance, jaro_winkler

PHONETIC_EPSILON = Fraction(1, 2)


class OrderingFunction(enum.Enum):
    NET_ED = "neted"
    NET2_ED = "net2ed"
    ED_OF_DMPHONE = "edofdmphone"
    NET_ED_OF_DMPHONE_ED = "netedofdmphoneed"


_FUNCTION_ALIASES = {
    "neted": OrderingFunction.NET_ED,
    "net_ed": OrderingFunction.NET_ED,
    "net2ed": OrderingFunction.NET2_ED,
    "net2_ed": OrderingFunction.NET2_ED,
    "edofdmphone": OrderingFunction.ED_OF_DMPHONE,
    "ed_of_dmphone": OrderingFunction.ED_OF_DMPHONE,
    "netedofdmphoneed": OrderingFunction.NET_ED_OF_DMPHONE_ED,
    "net_ed_of_dmphone_ed": OrderingFunction.NET_ED_OF_DMPHONE_ED,
}


def parse_function(label: str | OrderingFunction) -> OrderingFunction:
    if isinstance(label, OrderingFunction):
        return label
    try:
        return _FUNCTION_ALIASES[label.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown ordering function: {label!r}") from None


class SuggestionSource(enum.Enum):
    GRAPH = "graph"
    PHONETIC_FALLBACK = "phonetic_fallback"
    PHONETIC = "phonetic"
    STRING = "string"


@dataclass(frozen=True, slots=True)
class RankedSuggestion:
    name: str
    score: Fraction | float
    hop_distance: int | None
    edit_distance: int
    phonetic_factor: int | None
    source: SuggestionSource


@lru_cache(maxsize=65536)
def _dm_codes(name: str) -> tuple[str, ...]:
    """Double Metaphone code set; unencodable names sound like silence."""
    try:
        return encode(name, PhoneticAlgorithm.DOUBLE_METAPHONE).codes()
    except Unencodable:
        return ("",)


def dmphone_distance(a: str, b: str) -> int:
    """Minimum edit distance over all code-pair combinations of two names."""
    return min(edit_distance(ca, cb) for ca in _dm_codes(a) for cb in _dm_codes(b))


def _needs_phonetic(function: OrderingFunction) -> bool:
    return function in (OrderingFunction.ED_OF_DMPHONE, OrderingFunction.NET_ED_OF_DMPHONE_ED)


def _score_from_parts(hop: int, ed: int, min_dm: int | None, function: OrderingFunction) -> Fraction:
    if function is OrderingFunction.NET_ED:
        return Fraction(1, hop * ed)
    if function is OrderingFunction.NET2_ED:
        return Fraction(1, hop * hop * ed)
    phonetic = max(Fraction(min_dm), PHONETIC_EPSILON)
    if function is OrderingFunction.ED_OF_DMPHONE:
        return 1 / phonetic
    return 1 / (hop * ed * phonetic)


def score(
    query: str,
    candidate: str,
    hop: int,
    function: OrderingFunction | str = OrderingFunction.NET_ED,
) -> Fraction:
    """Ordering-function score for one candidate; exact rational."""
    if hop < 1:
        raise ValueError("hop count must be >= 1")
    if candidate == query:
        raise ValueError("candidate must differ from the query")
    function = parse_function(function)
    ed = edit_distance(query, candidate)
    min_dm = dmphone_distance(query, candidate) if _needs_phonetic(function) else None
    return _score_from_parts(hop, ed, min_dm, function)


def graft_suggest(
    graph: NameGraph,
    query: str,
    k: int = 10,
    depth: int = 2,
    function: OrderingFunction | str = OrderingFunction.NET_ED_OF_DMPHONE_ED,
) -> list[RankedSuggestion]:
    """BFS candidates scored and ranked; ties break on lower edit distance,
    then name order, so output is a deterministic total order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    function = parse_function(function)
    reachable = neighbors_within(graph, query, depth)
    suggestions: list[RankedSuggestion] = []
    for candidate, hop in reachable.items():
        ed = edit_distance(query, candidate)
        min_dm = dmphone_distance(query, candidate) if _needs_phonetic(function) else None
        suggestions.append(
            RankedSuggestion(
                name=candidate,
                score=_score_from_parts(hop, ed, min_dm, function),
                hop_distance=hop,
                edit_distance=ed,
                phonetic_factor=min_dm,
                source=SuggestionSource.GRAPH,
            )
        )
    suggestions.sort(key=lambda s: (-s.score, s.edit_distance, s.name))
    return suggestions[:k]


def phonetic_retrieve(code_index: CodeIndex, query: str, k: int = 10) -> list[RankedSuggestion]:
    """Names sharing the query's phonetic code(s), nearest edit distance
    first. Raises Unencodable when the query has no letters."""
    if k < 1:
        raise ValueError("k must be >= 1")
    candidates = code_index.candidates_for(query) - {query}
    ranked = sorted(
        (edit_distance(query, candidate), candidate) for candidate in candidates
    )
    return [
        RankedSuggestion(
            name=candidate,
            score=Fraction(1, ed),
            hop_distance=None,
            edit_distance=ed,
            phonetic_factor=None,
            source=SuggestionSource.PHONETIC,
        )
        for ed, candidate in ranked[:k]
    ]


def hgraft_suggest(
    graph: NameGraph,
    code_index: CodeIndex,
    query: str,
    k: int = 10,
    depth: int = 2,
    function: OrderingFunction | str = OrderingFunction.NET_ED_OF_DMPHONE_ED,
) -> list[RankedSuggestion]:
    """Graph suggestion when the query has graph edges, otherwise the
    phonetic bucket of the fallback algorithm (the index's algorithm)."""
    if graph.is_connected(query):
        return graft_suggest(graph, query, k=k, depth=depth, function=function)
    try:
        fallback = phonetic_retrieve(code_index, query, k=k)
    except Unencodable:
        return []
    return [replace(s, source=SuggestionSource.PHONETIC_FALLBACK) for s in fallback]


class StringMetric(enum.Enum):
    EDIT_DISTANCE = "ed"
    DAMERAU = "dld"
    JARO_WINKLER = "jw"


_METRIC_ALIASES = {
    "ed": StringMetric.EDIT_DISTANCE,
    "edit_distance": StringMetric.EDIT_DISTANCE,
    "levenshtein": StringMetric.EDIT_DISTANCE,
    "dld": StringMetric.DAMERAU,
    "damerau": StringMetric.DAMERAU,
    "damerau_levenshtein": StringMetric.DAMERAU,
    "jw": StringMetric.JARO_WINKLER,
    "jaro_winkler": StringMetric.JARO_WINKLER,
}


def parse_metric(label: str | StringMetric) -> StringMetric:
    if isinstance(label, StringMetric):
        return label
    try:
        return _METRIC_ALIASES[label.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown string metric: {label!r}") from None


def string_sim_retrieve(
    corpus: Iterable[str],
    query: str,
    metric: StringMetric | str = StringMetric.EDIT_DISTANCE,
    k: int = 10,
) -> list[RankedSuggestion]:
    """Whole-corpus scan baseline.

    Distance metrics rank ascending. Jaro-Winkler takes the top k by
    similarity, then re-sorts those k by edit distance to the query.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    metric = parse_metric(metric)
    if metric is StringMetric.JARO_WINKLER:
        top = sorted((-jaro_winkler(query, c), c) for c in corpus if c != query)[:k]
        resorted = sorted((edit_distance(query, c), c, -negsim) for negsim, c in top)
        return [
            RankedSuggestion(
                name=c,
                score=sim,
                hop_distance=None,
                edit_distance=ed,
                phonetic_factor=None,
                source=SuggestionSource.STRING,
            )
            for ed, c, sim in resorted
        ]
    distance = edit_distance if metric is StringMetric.EDIT_DISTANCE else damerau_levenshtein
    ranked = sorted((distance(query, c), c) for c in corpus if c != query)[:k]
    return [
        RankedSuggestion(
            name=c,
            score=Fraction(1, d),
            hop_distance=None,
            edit_distance=edit_distance(query, c),
            phonetic_factor=None,
            source=SuggestionSource.STRING,
        )
        for d, c in ranked
    ]
