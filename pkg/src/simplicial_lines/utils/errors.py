"""Exception hierarchy for simplicial-lines."""

from __future__ import annotations


class SimplicialLinesError(Exception):
    """Base class for every error raised by the library."""


class GraphError(SimplicialLinesError):
    """Invalid graph input."""


class LoopEdge(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"loop edge ({vertex},{vertex}) is not allowed in a simple graph")
        self.vertex = vertex


class DuplicateEdge(GraphError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"duplicate edge {edge} (use --dedupe to collapse duplicates)")
        self.edge = edge


class VertexOutOfRange(GraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} is outside 1..{n}")
        self.vertex = vertex
        self.n = n


class ParameterError(GraphError):
    """A family generator was called below its minimum parameter."""


class CorpusTooLarge(GraphError):
    """Exhaustive enumeration was requested for too many vertices."""


class GraphFormatError(SimplicialLinesError):
    """A graph file could not be parsed."""


class ComplexError(SimplicialLinesError):
    """Invalid simplicial complex operation."""


class VoidComplexError(ComplexError):
    def __init__(self, operation: str):
        super().__init__(f"{operation} is undefined on the void complex")
        self.operation = operation


class PreconditionError(SimplicialLinesError):
    """A theorem check was run outside its hypotheses."""


class MonomialError(SimplicialLinesError):
    """Invalid monomial arithmetic."""


class NotADivisor(MonomialError):
    pass


class UnitMonomialError(MonomialError):
    pass


class NonMinimalSystemError(MonomialError):
    pass


class OrderingError(SimplicialLinesError):
    """A facet ordering is not a permutation of the facets, or an index is out of range."""


class FacetBoundExceeded(SimplicialLinesError):
    def __init__(self, facet_count: int, bound: int):
        super().__init__(
            f"complex has {facet_count} facets, above the exhaustive search bound {bound}; "
            "supply an ordering or allow the heuristic"
        )
        self.facet_count = facet_count
        self.bound = bound


class ConfigError(SimplicialLinesError):
    """Invalid configuration value."""
