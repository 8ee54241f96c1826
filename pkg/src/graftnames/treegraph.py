"""Directed parent-to-child graph over profiles, and ancestor pair streams.

Vertices are profiles (named or not; unnamed profiles still pass hops
through), edges point from parent to child. Pair streams enumerate directed
1-, 2-, or 3-step ancestor paths and emit one name pair per path instance,
so a name pair repeated along many family lines carries its multiplicity
into the name-graph edge weights.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .records import ProfileRecord


class RelationKind(enum.Enum):
    PARENT_CHILD = "parent_child"
    GRANDPARENT_GRANDCHILD = "grandparent_grandchild"
    GREATGRANDPARENT_GREATGRANDCHILD = "greatgrandparent_greatgrandchild"
    ALL_ANCESTORS = "all_ancestors"

    @property
    def path_length(self) -> int | None:
        """Directed path length that realizes the relation; None for the union."""
        return {
            RelationKind.PARENT_CHILD: 1,
            RelationKind.GRANDPARENT_GRANDCHILD: 2,
            RelationKind.GREATGRANDPARENT_GREATGRANDCHILD: 3,
            RelationKind.ALL_ANCESTORS: None,
        }[self]


def parse_relation(label: str | RelationKind) -> RelationKind:
    if isinstance(label, RelationKind):
        return label
    try:
        return RelationKind(label.strip().lower())
    except ValueError:
        raise ValueError(f"unknown relation kind: {label!r}") from None


class FamilyTreeGraph:
    """Immutable after build; index-based storage keeps million-profile
    dumps inside a few hundred MB."""

    def __init__(self, name_view: str):
        self.name_view = name_view
        self._ids: list[str] = []
        self._index: dict[str, int] = {}
        self._names: list[str | None] = []
        self._children: list[list[int]] = []
        self._edge_count = 0
        self.dangling_parent_refs = 0
        self.self_references = 0
        self.duplicate_parent_links = 0
        self.cycle_members: tuple[str, ...] = ()
        self._component_count: int | None = None

    # -- construction ----------------------------------------------------

    def _add_vertex(self, profile_id: str, name: str | None) -> int:
        idx = len(self._ids)
        self._ids.append(profile_id)
        self._index[profile_id] = idx
        self._names.append(name)
        self._children.append([])
        return idx

    # -- queries -----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._ids)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_vertex(self, profile_id: str) -> bool:
        return profile_id in self._index

    def name_of(self, profile_id: str) -> str | None:
        return self._names[self._index[profile_id]]

    def vertices(self) -> Iterator[str]:
        return iter(self._ids)

    def edges(self) -> Iterator[tuple[str, str]]:
        for parent_idx, children in enumerate(self._children):
            parent_id = self._ids[parent_idx]
            for child_idx in children:
                yield parent_id, self._ids[child_idx]

    def _edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        rows = np.empty(self._edge_count, dtype=np.int32)
        cols = np.empty(self._edge_count, dtype=np.int32)
        pos = 0
        for parent_idx, children in enumerate(self._children):
            for child_idx in children:
                rows[pos] = parent_idx
                cols[pos] = child_idx
                pos += 1
        return rows, cols

    def component_count(self) -> int:
        """Weakly-connected component count over all vertices."""
        if self._component_count is None:
            n = self.vertex_count
            if n == 0:
                self._component_count = 0
            elif self._edge_count == 0:
                self._component_count = n
            else:
                rows, cols = self._edge_arrays()
                matrix = coo_matrix(
                    (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
                )
                count, _ = connected_components(matrix, directed=True, connection="weak")
                self._component_count = int(count)
        return self._component_count

    def _detect_cycles(self) -> None:
        """Report vertices inside parent-ancestry cycles (data corruption);
        nothing is deleted, path enumeration is depth-bounded anyway."""
        n = self.vertex_count
        if n == 0 or self._edge_count == 0:
            self.cycle_members = ()
            return
        rows, cols = self._edge_arrays()
        matrix = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
        count, labels = connected_components(matrix, directed=True, connection="strong")
        sizes = np.bincount(labels, minlength=count)
        in_cycle = sizes[labels] >= 2
        self.cycle_members = tuple(sorted(self._ids[i] for i in np.flatnonzero(in_cycle)))


def build_tree(profiles: Sequence[ProfileRecord], name_view: str = "forename") -> FamilyTreeGraph:
    """One vertex per profile, one parent-to-child edge per resolvable link.

    Dangling parent references and self-parenting are dropped and counted;
    a father and mother link to the same profile is stored once.
    """
    if name_view not in ("forename", "surname"):
        raise ValueError(f"unknown name view: {name_view!r}")
    tree = FamilyTreeGraph(name_view)
    for profile in profiles:
        tree._add_vertex(profile.profile_id, profile.name(name_view))
    index = tree._index
    for profile in profiles:
        child_idx = index[profile.profile_id]
        parent_ids = (profile.father_id, profile.mother_id)
        if profile.father_id is not None and profile.father_id == profile.mother_id:
            tree.duplicate_parent_links += 1
            parent_ids = (profile.father_id,)
        for parent_id in parent_ids:
            if parent_id is None:
                continue
            parent_idx = index.get(parent_id)
            if parent_idx is None:
                tree.dangling_parent_refs += 1
                continue
            if parent_idx == child_idx:
                tree.self_references += 1
                continue
            tree._children[parent_idx].append(child_idx)
            tree._edge_count += 1
    tree._detect_cycles()
    return tree


def ancestor_name_pairs(
    tree: FamilyTreeGraph,
    relation: RelationKind = RelationKind.PARENT_CHILD,
) -> Iterator[tuple[str, str]]:
    """Yield (ancestor name, descendant name) once per path instance.

    Paths run through unnamed intermediate profiles; a pair is skipped only
    when an *endpoint* name is absent. ALL_ANCESTORS concatenates the three
    single-depth streams.
    """
    if relation is RelationKind.ALL_ANCESTORS:
        for single in (
            RelationKind.PARENT_CHILD,
            RelationKind.GRANDPARENT_GRANDCHILD,
            RelationKind.GREATGRANDPARENT_GREATGRANDCHILD,
        ):
            yield from ancestor_name_pairs(tree, single)
        return
    depth = relation.path_length
    names = tree._names
    children = tree._children
    if depth == 1:
        for ancestor_idx, kids in enumerate(children):
            ancestor_name = names[ancestor_idx]
            if ancestor_name is None:
                continue
            for child_idx in kids:
                child_name = names[child_idx]
                if child_name is not None:
                    yield ancestor_name, child_name
    elif depth == 2:
        for ancestor_idx, kids in enumerate(children):
            ancestor_name = names[ancestor_idx]
            if ancestor_name is None:
                continue
            for mid_idx in kids:
                for leaf_idx in children[mid_idx]:
                    leaf_name = names[leaf_idx]
                    if leaf_name is not None:
                        yield ancestor_name, leaf_name
    elif depth == 3:
        for ancestor_idx, kids in enumerate(children):
            ancestor_name = names[ancestor_idx]
            if ancestor_name is None:
                continue
            for mid_idx in kids:
                for mid2_idx in children[mid_idx]:
                    for leaf_idx in children[mid2_idx]:
                        leaf_name = names[leaf_idx]
                        if leaf_name is not None:
                            yield ancestor_name, leaf_name
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unsupported relation: {relation}")


def vocabulary_of(profiles: Iterable[ProfileRecord], name_view: str) -> set[str]:
    """All distinct normalized names in the dataset for the selected view."""
    vocab: set[str] = set()
    for profile in profiles:
        name = profile.name(name_view)
        if name is not None:
            vocab.add(name)
    return vocab
