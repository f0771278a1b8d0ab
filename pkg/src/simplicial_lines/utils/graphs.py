"""Finite simple graphs, the named families and the exhaustive corpus."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator

import networkx as nx

from .errors import (
    CorpusTooLarge,
    DuplicateEdge,
    LoopEdge,
    ParameterError,
    VertexOutOfRange,
)

logger = logging.getLogger(__name__)

Edge = tuple[int, int]
Triangle = tuple[int, int, int]

# 2^15 edge subsets on 6 vertices
CORPUS_LIMIT = 6


def normalize_edge(i: int, j: int) -> Edge:
    """Return the edge {i, j} as a sorted pair."""
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class SimpleGraph:
    """A finite simple graph on the vertices 1..n.

    Edges are stored as sorted pairs. Instances are immutable; build them with
    `make_graph` or one of the family generators.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if i == j:
                raise LoopEdge(i)
            if i > j:
                raise ValueError(f"edge {(i, j)} is not normalized")
            for v in (i, j):
                if not 1 <= v <= self.n:
                    raise VertexOutOfRange(v, self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order."""
        return tuple(sorted(self.edges))

    @cached_property
    def _adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @property
    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices), default=0)

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self._adjacency[v]]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edge_list)
        return graph

    def connected_components(self) -> list[frozenset[int]]:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        components = nx.connected_components(self.to_networkx())
        return sorted((frozenset(c) for c in components), key=min)


def make_graph(n: int, edge_list: Iterable[Edge], dedupe: bool = False) -> SimpleGraph:
    """Validate an edge list and build a SimpleGraph.

    Duplicate pairs (in either orientation) are rejected unless `dedupe` is set.
    """
    if n < 0:
        raise ParameterError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for raw in edge_list:
        i, j = int(raw[0]), int(raw[1])
        if i == j:
            raise LoopEdge(i)
        for v in (i, j):
            if not 1 <= v <= n:
                raise VertexOutOfRange(v, n)
        edge = normalize_edge(i, j)
        if edge in seen:
            if not dedupe:
                raise DuplicateEdge(edge)
            logger.debug("Collapsed duplicate edge %s", edge)
            continue
        seen.add(edge)
    return SimpleGraph(n, frozenset(seen))


def disjoint_union(first: SimpleGraph, second: SimpleGraph) -> SimpleGraph:
    """Disjoint union with the vertices of `second` shifted by first.n."""
    shift = first.n
    shifted = {(i + shift, j + shift) for i, j in second.edges}
    return SimpleGraph(first.n + second.n, frozenset(first.edges | shifted))


def _require(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ParameterError(f"{name} needs a parameter >= {minimum}, got {value}")


def wheel_graph(n: int) -> SimpleGraph:
    """W_{n+1}: rim cycle 1..n plus hub n+1."""
    _require("wheel", n, 3)
    hub = n + 1
    rim = [normalize_edge(i, i % n + 1) for i in range(1, n + 1)]
    spokes = [(i, hub) for i in range(1, n + 1)]
    return make_graph(n + 1, rim + spokes)


def friendship_graph(n: int) -> SimpleGraph:
    """F_n: n triangles {2k-1, 2k, 2n+1} sharing the hub 2n+1."""
    _require("friendship", n, 1)
    hub = 2 * n + 1
    blades = [(2 * k - 1, 2 * k) for k in range(1, n + 1)]
    spokes = [(i, hub) for i in range(1, 2 * n + 1)]
    return make_graph(hub, blades + spokes)


def prism_graph(n: int) -> SimpleGraph:
    """Y_{3,n}: n stacked triangles {3k+1, 3k+2, 3k+3} joined by vertical edges."""
    _require("prism", n, 1)
    edges: list[Edge] = []
    for k in range(n):
        a, b, c = 3 * k + 1, 3 * k + 2, 3 * k + 3
        edges += [(a, b), (a, c), (b, c)]
        if k + 1 < n:
            edges += [(3 * k + i, 3 * (k + 1) + i) for i in (1, 2, 3)]
    return make_graph(3 * n, edges)


def cycle_graph(n: int) -> SimpleGraph:
    _require("cycle", n, 3)
    return make_graph(n, [normalize_edge(i, i % n + 1) for i in range(1, n + 1)])


def star_graph(k: int) -> SimpleGraph:
    """S_k: leaves 1..k and hub k+1."""
    _require("star", k, 1)
    return make_graph(k + 1, [(i, k + 1) for i in range(1, k + 1)])


def path_graph(n: int) -> SimpleGraph:
    _require("path", n, 1)
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    _require("complete", n, 1)
    return make_graph(n, combinations(range(1, n + 1), 2))


FAMILIES: dict[str, Callable[[int], SimpleGraph]] = {
    "wheel": wheel_graph,
    "friendship": friendship_graph,
    "prism": prism_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "path": path_graph,
    "complete": complete_graph,
}


def family_graph(name: str, param: int) -> SimpleGraph:
    """Build a named family member, e.g. family_graph("wheel", 4) is W_5."""
    try:
        generator = FAMILIES[name]
    except KeyError:
        raise ParameterError(
            f"unknown family {name!r}; choose from {', '.join(FAMILIES)}"
        ) from None
    return generator(param)


def triangles(graph: SimpleGraph) -> list[Triangle]:
    """All triangles {i, j, k}, i < j < k, in lexicographic order."""
    found: list[Triangle] = []
    for i, j in graph.edge_list:
        for k in sorted(graph.neighbors(i) & graph.neighbors(j)):
            if k > j:
                found.append((i, j, k))
    return sorted(found)


def is_connected_graph(graph: SimpleGraph) -> bool:
    """True iff every pair of vertices is joined by a path.

    Isolated vertices are components of their own, so a graph with an
    isolated vertex and at least one other vertex is disconnected.
    """
    if graph.n == 0:
        return True
    return nx.is_connected(graph.to_networkx())


def enumerate_graphs(
    n: int, min_degree: int = 0, limit: int = CORPUS_LIMIT
) -> Iterator[SimpleGraph]:
    """Every labeled graph on n vertices with minimum degree >= min_degree.

    Graphs are produced in the order of the edge-subset bitmask over the
    lexicographically ordered candidate edges.
    """
    if n < 1:
        raise ParameterError(f"corpus needs at least one vertex, got {n}")
    if n > limit:
        raise CorpusTooLarge(f"{n} vertices exceeds the exhaustive corpus bound {limit}")
    candidates = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(candidates)):
        edges = frozenset(e for bit, e in enumerate(candidates) if mask >> bit & 1)
        graph = SimpleGraph(n, edges)
        if graph.min_degree >= min_degree:
            yield graph


def corpus(max_n: int, min_degree: int = 0, limit: int = CORPUS_LIMIT) -> Iterator[SimpleGraph]:
    """Concatenation of enumerate_graphs(n, min_degree) for n = 1..max_n."""
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n, min_degree, limit)
