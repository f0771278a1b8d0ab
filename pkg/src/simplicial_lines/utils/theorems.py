"""Connectedness equivalence and Euler characteristic decomposition checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from .complexes import (
    euler_characteristic,
    gallai_complex,
    is_connected_complex,
    line_complex,
)
from .errors import PreconditionError
from .graphs import SimpleGraph, is_connected_graph
from .indices import anti_gallai_indices


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


def _require_no_isolated(graph: SimpleGraph, check: str) -> None:
    isolated = graph.isolated_vertices()
    if graph.n == 0 or isolated:
        raise PreconditionError(
            f"{check} needs every vertex to have degree >= 1; isolated: {isolated}"
        )


@dataclass(frozen=True)
class ConnectednessReport:
    graph_connected: bool
    complex_connected: bool

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.graph_connected == self.complex_connected else Verdict.FAIL

    def to_dict(self) -> dict:
        return {**asdict(self), "verdict": self.verdict.value}


@dataclass(frozen=True)
class EulerDecompositionReport:
    """χ(Δ_L(G)) against χ(Δ_Γ(G)) + |Ω_Γ′(G)|, each side computed on its own."""

    line_euler: int
    gallai_euler: int
    anti_gallai_count: int

    @property
    def verdict(self) -> Verdict:
        ok = self.line_euler == self.gallai_euler + self.anti_gallai_count
        return Verdict.PASS if ok else Verdict.FAIL

    def to_dict(self) -> dict:
        return {**asdict(self), "verdict": self.verdict.value}


def theorem_t1_check(graph: SimpleGraph) -> ConnectednessReport:
    """G is connected iff Δ_L(G) is connected."""
    _require_no_isolated(graph, "connectedness check")
    return ConnectednessReport(
        graph_connected=is_connected_graph(graph),
        complex_connected=is_connected_complex(line_complex(graph)),
    )


def theorem_t2_check(graph: SimpleGraph) -> EulerDecompositionReport:
    """χ(Δ_L(G)) = χ(Δ_Γ(G)) + |Ω_Γ′(G)|."""
    _require_no_isolated(graph, "Euler decomposition check")
    return EulerDecompositionReport(
        line_euler=euler_characteristic(line_complex(graph)),
        gallai_euler=euler_characteristic(gallai_complex(graph)),
        anti_gallai_count=len(anti_gallai_indices(graph)),
    )
