"""Simplicial complexes given by their facets, and their invariants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx
from more_itertools import powerset

from .errors import ComplexError, VoidComplexError
from .graphs import SimpleGraph
from .indices import IndexFamily, IndexKind, index_family

Face = tuple[int, ...]

# brute-force oracle walks all 2^|V| subsets
BRUTE_FORCE_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex <F_1, ..., F_h> stored as its sorted facet antichain.

    The vertex set is the union of the facets, so a complex built from a graph
    never contains the graph's isolated vertices. No facets means the void
    complex.
    """

    vertices: tuple[int, ...]
    facets: tuple[Face, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    def __len__(self) -> int:
        return len(self.facets)

    def __contains__(self, face) -> bool:
        face = set(face)
        return any(face <= set(f) for f in self.facets)

    def facet_index(self, facet: Iterable[int]) -> int:
        key = tuple(sorted(facet))
        try:
            return self.facets.index(key)
        except ValueError:
            raise ComplexError(f"{list(key)} is not a facet") from None

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}


@dataclass(frozen=True)
class FVector:
    """Face counts α_0..α_d, empty face excluded."""

    counts: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * alpha for k, alpha in enumerate(self.counts))


def complex_from_generators(family: IndexFamily | Iterable[Iterable[int]]) -> SimplicialComplex:
    """<F | F in family>: keep the inclusion-maximal members.

    An empty family gives the void complex.
    """
    members = family.members if isinstance(family, IndexFamily) else family
    sets = {frozenset(m) for m in members}
    if frozenset() in sets:
        raise ComplexError("generators must be non-empty vertex sets")
    facets = [s for s in sets if not any(s < other for other in sets)]
    vertices = sorted(set().union(*sets)) if sets else []
    return SimplicialComplex(tuple(vertices), tuple(sorted(tuple(sorted(f)) for f in facets)))


def complex_for(graph: SimpleGraph, kind: IndexKind | str) -> SimplicialComplex:
    return complex_from_generators(index_family(graph, kind))


def line_complex(graph: SimpleGraph) -> SimplicialComplex:
    """Δ_L(G)."""
    return complex_for(graph, IndexKind.LINE)


def gallai_complex(graph: SimpleGraph) -> SimplicialComplex:
    """Δ_Γ(G)."""
    return complex_for(graph, IndexKind.GALLAI)


def anti_gallai_complex(graph: SimpleGraph) -> SimplicialComplex:
    """Δ_Γ′(G)."""
    return complex_for(graph, IndexKind.ANTI_GALLAI)


def _require_non_void(cx: SimplicialComplex, operation: str) -> None:
    if cx.is_void:
        raise VoidComplexError(operation)


def faces(cx: SimplicialComplex) -> set[Face]:
    """Every non-empty face, by subset expansion of each facet."""
    found: set[Face] = set()
    for facet in cx.facets:
        for size in range(1, len(facet) + 1):
            found.update(combinations(facet, size))
    return found


def f_vector(cx: SimplicialComplex) -> FVector:
    _require_non_void(cx, "f_vector")
    counts = [0] * (dimension(cx) + 1)
    for face in faces(cx):
        counts[len(face) - 1] += 1
    return FVector(tuple(counts))


def brute_force_f_vector(cx: SimplicialComplex) -> FVector:
    """Independent f-vector: test every vertex subset for containment in a facet."""
    _require_non_void(cx, "brute_force_f_vector")
    if len(cx.vertices) > BRUTE_FORCE_VERTEX_LIMIT:
        raise ComplexError(
            f"brute force is limited to {BRUTE_FORCE_VERTEX_LIMIT} vertices, "
            f"complex has {len(cx.vertices)}"
        )
    facet_sets = [frozenset(f) for f in cx.facets]
    counts: dict[int, int] = {}
    for subset in powerset(cx.vertices):
        if subset and any(facet.issuperset(subset) for facet in facet_sets):
            counts[len(subset) - 1] = counts.get(len(subset) - 1, 0) + 1
    return FVector(tuple(counts[k] for k in range(max(counts) + 1)))


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Unreduced χ = Σ (-1)^k α_k."""
    return f_vector(cx).euler_characteristic


def dimension(cx: SimplicialComplex) -> int:
    _require_non_void(cx, "dimension")
    return max(len(f) for f in cx.facets) - 1


def is_pure(cx: SimplicialComplex) -> bool:
    _require_non_void(cx, "is_pure")
    return len({len(f) for f in cx.facets}) == 1


def _facet_graph(cx: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cx.facets)))
    for a, b in combinations(range(len(cx.facets)), 2):
        if set(cx.facets[a]) & set(cx.facets[b]):
            graph.add_edge(a, b)
    return graph


def connected_components(cx: SimplicialComplex) -> list[SimplicialComplex]:
    """Components of the facet-intersection graph, ordered by smallest vertex."""
    _require_non_void(cx, "connected_components")
    parts = [
        complex_from_generators(cx.facets[a] for a in component)
        for component in nx.connected_components(_facet_graph(cx))
    ]
    return sorted(parts, key=lambda part: part.vertices[0])


def is_connected_complex(cx: SimplicialComplex) -> bool:
    _require_non_void(cx, "is_connected_complex")
    return nx.is_connected(_facet_graph(cx))


def is_subcomplex(sub: SimplicialComplex, cx: SimplicialComplex) -> bool:
    """Every facet of `sub` is a face of `cx`.

    Face containment, not facet-set inclusion: Δ_Γ(G) keeps 2-element facets
    that are only faces of Δ_L(G).
    """
    return all(facet in cx for facet in sub.facets)


def is_spanning_subcomplex(sub: SimplicialComplex, cx: SimplicialComplex) -> bool:
    return sub.vertices == cx.vertices and is_subcomplex(sub, cx)


def restriction(cx: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Induced subcomplex on `vertices`."""
    keep = set(vertices)
    return complex_from_generators(
        part for part in (set(f) & keep for f in cx.facets) if part
    )


def excision_holds(cx: SimplicialComplex) -> bool:
    """χ(Δ) equals the sum of χ over the connected components."""
    return euler_characteristic(cx) == sum(
        euler_characteristic(part) for part in connected_components(cx)
    )


def dropped_vertices(graph: SimpleGraph, cx: SimplicialComplex) -> list[int]:
    """Graph vertices that do not appear in the complex."""
    present = set(cx.vertices)
    return [v for v in graph.vertices if v not in present]
