"""Line, Gallai and anti-Gallai index families Υ(G), Ω_Γ(G), Ω_Γ′(G)."""

from __future__ import annotations

from dataclasses import dataclass

from .derived import (
    AdjacencyKind,
    EdgeVertexGraph,
    anti_gallai_graph,
    gallai_graph,
    line_graph,
)
from .graphs import SimpleGraph

Index = tuple[int, ...]

IndexKind = AdjacencyKind


def face_notation(face) -> str:
    """F_{1,2,3} style label."""
    return "F_{" + ",".join(str(v) for v in face) + "}"


@dataclass(frozen=True)
class IndexFamily:
    """Generators of one of the three complexes, stored as sorted vertex tuples."""

    kind: IndexKind
    members: frozenset[Index]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_members())

    def __contains__(self, item) -> bool:
        return tuple(sorted(item)) in self.members

    def sorted_members(self) -> list[Index]:
        return sorted(self.members, key=lambda m: (len(m), m))

    def notation(self) -> list[str]:
        """Members written as F_{i,j,k}."""
        return [face_notation(m) for m in self.sorted_members()]

    def to_list(self) -> list[list[int]]:
        return [list(m) for m in sorted(self.members)]


def _family(derived: EdgeVertexGraph, with_isolated: bool) -> IndexFamily:
    members: set[Index] = set()
    for a, b in derived.adjacency:
        members.add(tuple(sorted(set(derived.labels[a]) | set(derived.labels[b]))))
    if with_isolated:
        for a in derived.isolated_labels():
            members.add(derived.labels[a])
    return IndexFamily(derived.kind, frozenset(members))


def line_indices(graph: SimpleGraph) -> IndexFamily:
    """Υ(G): {i,j,k} per incident edge pair, {i,j} per edge isolated in L(G)."""
    return _family(line_graph(graph), with_isolated=True)


def gallai_indices(graph: SimpleGraph) -> IndexFamily:
    """Ω_Γ(G): {i,j,k} per Γ-adjacent pair, {i,j} per edge isolated in Γ(G)."""
    return _family(gallai_graph(graph), with_isolated=True)


def anti_gallai_indices(graph: SimpleGraph) -> IndexFamily:
    """Ω_Γ′(G): one {i,j,k} per triangle of G; edges isolated in Γ′(G) add nothing."""
    return _family(anti_gallai_graph(graph), with_isolated=False)


_EXTRACTORS = {
    IndexKind.LINE: line_indices,
    IndexKind.GALLAI: gallai_indices,
    IndexKind.ANTI_GALLAI: anti_gallai_indices,
}


def index_family(graph: SimpleGraph, kind: IndexKind | str) -> IndexFamily:
    return _EXTRACTORS[IndexKind(kind)](graph)
