"""Weighted graph over distinct names, filtered by an edit-distance range.

Edges join two names that occur as an ancestor/descendant pair with edit
distance inside [lo, hi]; the weight counts pair instances. The adjacency
index stores only names with at least one edge (memory proportional to
edges, not vocabulary); isolated names stay members of the vocabulary set.
Traversal treats edges as undirected - a child's form must be able to
suggest the parent form and vice versa - while per-direction counts are kept
for diagnostics.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .strsim import EditDistanceRange, edit_distance_at_most

GRAPH_FILE_MAGIC = "graftnames-graph"
GRAPH_FILE_VERSION = 1


class InvalidRange(ValueError):
    pass


class GraphFormatError(Exception):
    def __init__(self, path: str, line_number: int, reason: str):
        super().__init__(f"{path}:{line_number}: {reason}")
        self.path = path
        self.line_number = line_number
        self.reason = reason


@dataclass(slots=True)
class EdgeRecord:
    """weight == sum(direction_counts); distance is the cached edit distance.

    direction_counts order follows the canonical (lexicographically smaller,
    larger) vertex order of the edge key: first how often the smaller name
    was the ancestor, then how often it was the descendant.
    """

    weight: int
    distance: int
    direction_counts: tuple[int, int]


@dataclass(slots=True)
class NameGraph:
    ed_range: EditDistanceRange
    vocabulary: frozenset[str]
    edges: dict[tuple[str, str], EdgeRecord] = field(default_factory=dict)
    adjacency: dict[str, set[str]] = field(default_factory=dict)
    meta: dict[str, str] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.vocabulary)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def non_isolated_count(self) -> int:
        return len(self.adjacency)

    def has_name(self, name: str) -> bool:
        return name in self.vocabulary

    def is_connected(self, name: str) -> bool:
        """True when the name has at least one edge (BFS can reach something)."""
        return name in self.adjacency

    def neighbors(self, name: str) -> set[str]:
        return self.adjacency.get(name, set())

    def edge(self, a: str, b: str) -> EdgeRecord | None:
        return self.edges.get((a, b) if a <= b else (b, a))

    def component_count(self) -> int:
        """Connected components over non-isolated vertices."""
        seen: set[str] = set()
        count = 0
        for start in self.adjacency:
            if start in seen:
                continue
            count += 1
            queue = deque([start])
            seen.add(start)
            while queue:
                node = queue.popleft()
                for neighbor in self.adjacency[node]:
                    if neighbor not in seen:
                        seen.add(neighbor)
                        queue.append(neighbor)
        return count


def build_name_graph(
    pairs: Iterable[tuple[str, str]],
    ed_range: EditDistanceRange,
    vocabulary: Iterable[str],
    meta: Mapping[str, str] | None = None,
) -> NameGraph:
    """Aggregate a pair stream into the filtered weighted graph.

    The range's lower bound must be >= 1: identical names would form
    self-loops.
    """
    if ed_range.lo < 1:
        raise InvalidRange(f"edit distance range must start at 1 or above, got {ed_range}")
    counts: Counter[tuple[str, str]] = Counter()
    for pair in pairs:
        counts[pair] += 1
    return build_name_graph_from_counts(counts, ed_range, vocabulary, meta)


def build_name_graph_from_counts(
    pair_counts: Mapping[tuple[str, str], int],
    ed_range: EditDistanceRange,
    vocabulary: Iterable[str],
    meta: Mapping[str, str] | None = None,
) -> NameGraph:
    if ed_range.lo < 1:
        raise InvalidRange(f"edit distance range must start at 1 or above, got {ed_range}")
    graph = NameGraph(ed_range=ed_range, vocabulary=frozenset(vocabulary), meta=dict(meta or {}))
    distance_cache: dict[tuple[str, str], int | None] = {}
    for (ancestor, descendant), count in pair_counts.items():
        if ancestor == descendant:
            continue
        key = (ancestor, descendant) if ancestor <= descendant else (descendant, ancestor)
        if key in distance_cache:
            distance = distance_cache[key]
        else:
            distance = edit_distance_at_most(ancestor, descendant, ed_range.hi)
            distance_cache[key] = distance
        if distance is None or distance < ed_range.lo:
            continue
        forward = ancestor == key[0]
        record = graph.edges.get(key)
        if record is None:
            graph.edges[key] = EdgeRecord(
                weight=count,
                distance=distance,
                direction_counts=(count, 0) if forward else (0, count),
            )
            graph.adjacency.setdefault(key[0], set()).add(key[1])
            graph.adjacency.setdefault(key[1], set()).add(key[0])
        else:
            record.weight += count
            fwd, rev = record.direction_counts
            record.direction_counts = (fwd + count, rev) if forward else (fwd, rev + count)
    return graph


def neighbors_within(graph: NameGraph, name: str, depth: int = 2) -> dict[str, int]:
    """Breadth-first hop distances from ``name``, up to ``depth`` hops.

    The start name is excluded; an unknown or isolated start yields an empty
    map.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if name not in graph.adjacency:
        return {}
    hops: dict[str, int] = {}
    frontier = deque([(name, 0)])
    seen = {name}
    while frontier:
        node, hop = frontier.popleft()
        if hop == depth:
            continue
        for neighbor in graph.adjacency[node]:
            if neighbor not in seen:
                seen.add(neighbor)
                hops[neighbor] = hop + 1
                frontier.append((neighbor, hop + 1))
    return hops


@dataclass(frozen=True, slots=True)
class GraphSizeRow:
    relation: str
    ed_range: str
    vertex_count: int
    non_isolated_count: int
    edge_count: int
    component_count: int


def graph_size_report(
    graphs: Sequence[tuple[object, EditDistanceRange, NameGraph]],
) -> list[GraphSizeRow]:
    """One deterministic size row per graph, in input order."""
    rows = []
    for relation, ed_range, graph in graphs:
        label = getattr(relation, "value", str(relation))
        rows.append(
            GraphSizeRow(
                relation=label,
                ed_range=str(ed_range),
                vertex_count=graph.vertex_count,
                non_isolated_count=graph.non_isolated_count,
                edge_count=graph.edge_count,
                component_count=graph.component_count(),
            )
        )
    return rows


def save_graph(graph: NameGraph, path: str | Path) -> None:
    """Versioned line-oriented text format; rebuildable byte-for-byte.

    Names cannot contain tabs or newlines after normalization, so plain TSV
    lines are unambiguous. Sections: header, meta, vocabulary, edges (both
    sorted).
    """
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{GRAPH_FILE_MAGIC} {GRAPH_FILE_VERSION}\n")
        meta = dict(graph.meta)
        meta["ed_lo"] = str(graph.ed_range.lo)
        meta["ed_hi"] = str(graph.ed_range.hi)
        for key in sorted(meta):
            handle.write(f"meta\t{key}\t{meta[key]}\n")
        for name in sorted(graph.vocabulary):
            handle.write(f"name\t{name}\n")
        for (a, b) in sorted(graph.edges):
            record = graph.edges[(a, b)]
            fwd, rev = record.direction_counts
            handle.write(f"edge\t{a}\t{b}\t{record.weight}\t{record.distance}\t{fwd}\t{rev}\n")


def load_graph(path: str | Path) -> NameGraph:
    path_str = str(path)
    vocabulary: set[str] = set()
    meta: dict[str, str] = {}
    edges: dict[tuple[str, str], EdgeRecord] = {}
    adjacency: dict[str, set[str]] = {}
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().rstrip("\n")
        parts = header.split(" ")
        if len(parts) != 2 or parts[0] != GRAPH_FILE_MAGIC:
            raise GraphFormatError(path_str, 1, "not a name-graph file (bad magic)")
        if parts[1] != str(GRAPH_FILE_VERSION):
            raise GraphFormatError(path_str, 1, f"unsupported version {parts[1]!r}")
        for line_number, line in enumerate(handle, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            kind = fields[0]
            if kind == "meta":
                if len(fields) != 3:
                    raise GraphFormatError(path_str, line_number, "meta line needs key and value")
                meta[fields[1]] = fields[2]
            elif kind == "name":
                if len(fields) != 2:
                    raise GraphFormatError(path_str, line_number, "name line needs one field")
                vocabulary.add(fields[1])
            elif kind == "edge":
                if len(fields) != 7:
                    raise GraphFormatError(path_str, line_number, "edge line needs six fields")
                a, b = fields[1], fields[2]
                try:
                    weight = int(fields[3])
                    distance = int(fields[4])
                    fwd = int(fields[5])
                    rev = int(fields[6])
                except ValueError:
                    raise GraphFormatError(path_str, line_number, "non-numeric edge payload") from None
                if weight != fwd + rev or weight < 1:
                    raise GraphFormatError(path_str, line_number, "edge weight/direction mismatch")
                edges[(a, b)] = EdgeRecord(weight=weight, distance=distance, direction_counts=(fwd, rev))
                adjacency.setdefault(a, set()).add(b)
                adjacency.setdefault(b, set()).add(a)
            else:
                raise GraphFormatError(path_str, line_number, f"unknown record kind {kind!r}")
    try:
        ed_range = EditDistanceRange(lo=int(meta.pop("ed_lo")), hi=int(meta.pop("ed_hi")))
    except (KeyError, ValueError):
        raise GraphFormatError(path_str, 1, "missing or invalid ed_lo/ed_hi metadata") from None
    for name in adjacency:
        if name not in vocabulary:
            raise GraphFormatError(path_str, 1, f"edge endpoint {name!r} missing from vocabulary")
    return NameGraph(
        ed_range=ed_range,
        vocabulary=frozenset(vocabulary),
        edges=edges,
        adjacency=adjacency,
        meta=meta,
    )
