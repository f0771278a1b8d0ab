"""Line, Gallai and anti-Gallai graphs: graphs whose vertices are the edges of G."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import networkx as nx

from .graphs import Edge, SimpleGraph


class AdjacencyKind(str, Enum):
    LINE = "line"
    GALLAI = "gallai"
    ANTI_GALLAI = "anti-gallai"


@dataclass(frozen=True)
class EdgeVertexGraph:
    """A graph on the edges of G.

    `labels[a]` is the a-th edge of G in lexicographic order; `adjacency`
    holds pairs (a, b), a < b, of label indices.
    """

    kind: AdjacencyKind
    labels: tuple[Edge, ...]
    adjacency: frozenset[tuple[int, int]]

    def neighbors(self, index: int) -> list[int]:
        return sorted(
            b if a == index else a for a, b in self.adjacency if index in (a, b)
        )

    def isolated_labels(self) -> list[int]:
        touched = {a for pair in self.adjacency for a in pair}
        return [a for a in range(len(self.labels)) if a not in touched]

    def adjacent_edges(self) -> set[frozenset[Edge]]:
        """Adjacency expressed on the edge labels themselves."""
        return {frozenset((self.labels[a], self.labels[b])) for a, b in self.adjacency}

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.labels)
        graph.add_edges_from((self.labels[a], self.labels[b]) for a, b in self.adjacency)
        return graph

    def to_dict(self) -> dict:
        """SimpleGraph JSON document (1-based label indices) plus `labels`."""
        return {
            "n": len(self.labels),
            "edges": [[a + 1, b + 1] for a, b in sorted(self.adjacency)],
            "labels": [list(edge) for edge in self.labels],
        }


def _incident_pairs(graph: SimpleGraph):
    """Yield (a, b, shared, others) for every incident label pair a < b."""
    labels = graph.edge_list
    for a, b in combinations(range(len(labels)), 2):
        shared = set(labels[a]) & set(labels[b])
        if len(shared) == 1:
            (j,) = shared
            (i,) = set(labels[a]) - shared
            (k,) = set(labels[b]) - shared
            yield a, b, j, (i, k)


def spans_triangle(graph: SimpleGraph, others: tuple[int, int]) -> bool:
    """Incident edges e_{i,j}, e_{j,k} span a triangle iff {i,k} is an edge."""
    return graph.has_edge(*others)


def _derived(graph: SimpleGraph, kind: AdjacencyKind) -> EdgeVertexGraph:
    adjacency = set()
    for a, b, _, others in _incident_pairs(graph):
        if kind is AdjacencyKind.LINE:
            adjacency.add((a, b))
        elif kind is AdjacencyKind.GALLAI and not spans_triangle(graph, others):
            adjacency.add((a, b))
        elif kind is AdjacencyKind.ANTI_GALLAI and spans_triangle(graph, others):
            adjacency.add((a, b))
    return EdgeVertexGraph(kind, graph.edge_list, frozenset(adjacency))


def line_graph(graph: SimpleGraph) -> EdgeVertexGraph:
    """L(G): edges adjacent iff they share exactly one endpoint."""
    return _derived(graph, AdjacencyKind.LINE)


def gallai_graph(graph: SimpleGraph) -> EdgeVertexGraph:
    """Γ(G): incident edges that do not span a triangle."""
    return _derived(graph, AdjacencyKind.GALLAI)


def anti_gallai_graph(graph: SimpleGraph) -> EdgeVertexGraph:
    """Γ′(G): incident edges that span a triangle."""
    return _derived(graph, AdjacencyKind.ANTI_GALLAI)


def adjacency_partition_holds(graph: SimpleGraph) -> bool:
    """Γ(G) and Γ′(G) split the adjacency of L(G) into two disjoint parts."""
    line = line_graph(graph).adjacency
    gallai = gallai_graph(graph).adjacency
    anti = anti_gallai_graph(graph).adjacency
    return not (gallai & anti) and (gallai | anti) == line
