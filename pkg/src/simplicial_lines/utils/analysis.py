"""Analysis reports: graph summary, per-complex invariants and theorem verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .complexes import (
    SimplicialComplex,
    complex_for,
    connected_components,
    dimension,
    dropped_vertices,
    f_vector,
    is_connected_complex,
    is_pure,
)
from .errors import PreconditionError
from .graphs import SimpleGraph, is_connected_graph, triangles
from .indices import IndexKind
from .theorems import (
    ConnectednessReport,
    EulerDecompositionReport,
    Verdict,
    theorem_t1_check,
    theorem_t2_check,
)

ALL_KINDS = (IndexKind.LINE, IndexKind.GALLAI, IndexKind.ANTI_GALLAI)


@dataclass(frozen=True)
class ComplexBlock:
    kind: IndexKind
    complex: SimplicialComplex
    dropped: tuple[int, ...]

    def to_dict(self) -> dict:
        cx = self.complex
        data = {
            "kind": self.kind.value,
            "vertices": list(cx.vertices),
            "facets": [list(f) for f in cx.facets],
            "dropped_vertices": list(self.dropped),
            "void": cx.is_void,
        }
        if cx.is_void:
            data.update(f_vector=None, euler=None, dim=None, pure=None, connected=None, components=0)
            return data
        fv = f_vector(cx)
        data.update(
            f_vector=list(fv.counts),
            euler=fv.euler_characteristic,
            dim=dimension(cx),
            pure=is_pure(cx),
            connected=is_connected_complex(cx),
            components=len(connected_components(cx)),
        )
        return data


@dataclass(frozen=True)
class TheoremBlock:
    connectedness: Optional[ConnectednessReport]
    euler: Optional[EulerDecompositionReport]
    skipped_reason: Optional[str] = None

    @property
    def failed(self) -> bool:
        reports = [r for r in (self.connectedness, self.euler) if r is not None]
        return any(r.verdict is Verdict.FAIL for r in reports)

    def to_dict(self) -> dict:
        if self.skipped_reason is not None:
            skipped = {"verdict": Verdict.SKIPPED.value, "reason": self.skipped_reason}
            return {"t1": skipped, "t2": skipped}
        return {"t1": self.connectedness.to_dict(), "t2": self.euler.to_dict()}


@dataclass(frozen=True)
class AnalysisReport:
    graph: SimpleGraph
    blocks: tuple[ComplexBlock, ...]
    theorems: TheoremBlock
    triangle_count: int = field(default=0)

    def to_dict(self) -> dict:
        g = self.graph
        return {
            "graph": {
                "n": g.n,
                "m": g.m,
                "triangles": self.triangle_count,
                "connected": is_connected_graph(g),
                "isolated_vertices": g.isolated_vertices(),
            },
            "complexes": [b.to_dict() for b in self.blocks],
            "theorems": self.theorems.to_dict(),
        }


def _theorems(graph: SimpleGraph) -> TheoremBlock:
    # Verdicts never abort the analysis: a FAIL is reported with its numbers.
    try:
        return TheoremBlock(theorem_t1_check(graph), theorem_t2_check(graph))
    except PreconditionError as exc:
        return TheoremBlock(None, None, skipped_reason=str(exc))


def analyze_graph(
    graph: SimpleGraph, kinds: Iterable[IndexKind | str] = ALL_KINDS
) -> AnalysisReport:
    blocks = []
    for kind in kinds:
        kind = IndexKind(kind)
        cx = complex_for(graph, kind)
        blocks.append(ComplexBlock(kind, cx, tuple(dropped_vertices(graph, cx))))
    return AnalysisReport(
        graph=graph,
        blocks=tuple(blocks),
        theorems=_theorems(graph),
        triangle_count=len(triangles(graph)),
    )
