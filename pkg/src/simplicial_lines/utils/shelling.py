"""Shellability by the shelling definition and by linear residuals of the facet ideal.

Both step predicates depend only on the set of earlier facets and the facet
being added, so the ordering search memoizes on bitmasks of placed facets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .complexes import Face, SimplicialComplex
from .errors import FacetBoundExceeded, NonMinimalSystemError, OrderingError, VoidComplexError
from .monomials import (
    FacetIdeal,
    FacetOrder,
    Monomial,
    minimal_generators,
    residual_set,
    residuals_against,
    resolve_order,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_FACETS = 20


class Method(str, Enum):
    DEFINITION = "definition"
    RESIDUALS = "residuals"
    BOTH = "both"


class ShellingVerdict(str, Enum):
    SHELLABLE = "SHELLABLE"
    NOT_SHELLABLE = "NOT_SHELLABLE"
    INCONCLUSIVE = "INCONCLUSIVE"


def _maximal_faces(parts: Iterable[frozenset[int]]) -> list[Face]:
    unique = set(parts)
    maximal = [p for p in unique if not any(p < q for q in unique)]
    return sorted((tuple(sorted(p)) for p in maximal), key=lambda f: (len(f), f))


def shelling_step_ok(prefix: Iterable[Iterable[int]], facet: Iterable[int]) -> tuple[bool, list[Face]]:
    """Is <prefix> ∩ <facet> pure of dimension dim(facet) - 1?

    Returns the verdict and the maximal intersection faces. Disjoint prefix
    facets contribute the empty face, which fails unless |facet| = 1.
    """
    target = frozenset(facet)
    maximal = _maximal_faces(frozenset(f) & target for f in prefix)
    ok = bool(maximal) and all(len(face) == len(target) - 1 for face in maximal)
    return ok, maximal


def residual_step_ok(prefix: Iterable[Iterable[int]], facet: Iterable[int]) -> tuple[bool, list[Monomial]]:
    """Is the residual set of x_facet against the prefix minimally generated in degree 1?"""
    quotients = residuals_against((Monomial.of(f) for f in prefix), Monomial.of(facet))
    generators = minimal_generators(quotients)
    return bool(generators) and all(m.is_linear for m in generators), generators


def step_linear(ideal: FacetIdeal, position: int) -> tuple[bool, list[Monomial]]:
    """Linear-residual test at generator m_position (1-based, position >= 2)."""
    generators = minimal_generators(residual_set(ideal, position))
    return bool(generators) and all(m.is_linear for m in generators), generators


@dataclass(frozen=True)
class StepRecord:
    position: int
    facet_index: int
    facet: Face
    ok: bool
    intersections: Optional[tuple[Face, ...]] = None
    residuals: Optional[tuple[Monomial, ...]] = None

    def to_dict(self) -> dict:
        data: dict = {
            "position": self.position,
            "facet": list(self.facet),
            "ok": self.ok,
        }
        if self.intersections is not None:
            data["intersections"] = [list(f) for f in self.intersections]
        if self.residuals is not None:
            data["residuals"] = [m.sorted_support() for m in self.residuals]
        return data


@dataclass(frozen=True)
class StepDisagreement:
    """A (prefix, facet) pair on which the two step predicates differ."""

    prefix: tuple[Face, ...]
    facet: Face
    definition_ok: bool
    residuals_ok: bool

    def to_dict(self) -> dict:
        return {
            "prefix": [list(f) for f in self.prefix],
            "facet": list(self.facet),
            "definition": self.definition_ok,
            "residuals": self.residuals_ok,
        }


@dataclass
class ShellingCertificate:
    verdict: ShellingVerdict
    method: Method
    facets: tuple[Face, ...]
    ordering: tuple[int, ...] = ()
    steps: list[StepRecord] = field(default_factory=list)
    search: str = "verify"
    refutation: Optional[str] = None
    failed_at: Optional[int] = None
    explored: int = 0
    disagreements: list[StepDisagreement] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict is ShellingVerdict.SHELLABLE

    def ordered_facets(self) -> list[Face]:
        return [self.facets[i] for i in self.ordering]

    def reverify(self, cx: SimplicialComplex) -> bool:
        """Re-check a SHELLABLE ordering under both criteria."""
        if not self.passed:
            return False
        again = verify_ordering(cx, list(self.ordering), Method.BOTH)
        return again.passed and not again.disagreements

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "method": self.method.value,
            "search": self.search,
            "facets": [list(f) for f in self.facets],
            "ordering": list(self.ordering),
            "steps": [s.to_dict() for s in self.steps],
            "refutation": self.refutation,
            "failed_at": self.failed_at,
            "explored": self.explored,
            "disagreements": [d.to_dict() for d in self.disagreements],
        }


class _StepOracle:
    """Evaluates the chosen step predicate and records disagreements under Method.BOTH."""

    def __init__(self, method: Method):
        self.method = method
        self.disagreements: list[StepDisagreement] = []

    def check(self, prefix: list[Face], facet: Face, position: int, index: int) -> StepRecord:
        intersections = residuals = None
        if self.method in (Method.DEFINITION, Method.BOTH):
            def_ok, found = shelling_step_ok(prefix, facet)
            intersections = tuple(found)
        if self.method in (Method.RESIDUALS, Method.BOTH):
            res_ok, generators = residual_step_ok(prefix, facet)
            residuals = tuple(generators)
        if self.method is Method.BOTH and def_ok != res_ok:
            logger.error(
                "Step predicates disagree at facet %s after %s: definition=%s residuals=%s",
                facet, prefix, def_ok, res_ok,
            )
            self.disagreements.append(
                StepDisagreement(tuple(prefix), facet, def_ok, res_ok)
            )
        ok = res_ok if self.method is Method.RESIDUALS else def_ok
        return StepRecord(position, index, facet, ok, intersections, residuals)


def _merge(*groups: list[StepDisagreement]) -> list[StepDisagreement]:
    return list(dict.fromkeys(d for group in groups for d in group))


def _first_step(cx: SimplicialComplex, index: int) -> StepRecord:
    return StepRecord(1, index, cx.facets[index], True)


def verify_ordering(
    cx: SimplicialComplex, ordering: FacetOrder, method: Method | str = Method.BOTH
) -> ShellingCertificate:
    """Check one facet ordering step by step, without search.

    A failing ordering proves nothing about other orderings, so it yields
    INCONCLUSIVE with `failed_at` set to the first failing position.
    """
    method = Method(method)
    if cx.is_void:
        raise VoidComplexError("verify_ordering")
    indices = resolve_order(cx, ordering)
    oracle = _StepOracle(method)
    steps = [_first_step(cx, indices[0])]
    for position in range(2, len(indices) + 1):
        prefix = [cx.facets[i] for i in indices[: position - 1]]
        index = indices[position - 1]
        steps.append(oracle.check(prefix, cx.facets[index], position, index))
    failed = [s.position for s in steps if not s.ok]
    return ShellingCertificate(
        verdict=ShellingVerdict.INCONCLUSIVE if failed else ShellingVerdict.SHELLABLE,
        method=method,
        facets=cx.facets,
        ordering=indices,
        steps=steps,
        failed_at=failed[0] if failed else None,
        disagreements=oracle.disagreements,
    )


def has_linear_residuals(ideal: FacetIdeal) -> tuple[bool, ShellingCertificate]:
    """Linear-residual test of an ordered minimal generator system."""
    if not ideal.is_minimal_system():
        raise NonMinimalSystemError("generators are not pairwise indivisible")
    r = len(ideal)
    if sorted(ideal.facet_order) != list(range(r)):
        raise OrderingError(f"facet_order must be a permutation of 0..{r - 1}")
    # facets[facet_order[i]] is the support of m_{i+1}
    facets: list[Face] = [()] * r
    for generator, index in zip(ideal.generators, ideal.facet_order):
        facets[index] = tuple(generator.sorted_support())
    steps = [StepRecord(1, ideal.facet_order[0], facets[ideal.facet_order[0]], True)] if r else []
    for position in range(2, r + 1):
        ok, generators = step_linear(ideal, position)
        index = ideal.facet_order[position - 1]
        steps.append(StepRecord(position, index, facets[index], ok, residuals=tuple(generators)))
    failed = [s.position for s in steps if not s.ok]
    certificate = ShellingCertificate(
        verdict=ShellingVerdict.INCONCLUSIVE if failed else ShellingVerdict.SHELLABLE,
        method=Method.RESIDUALS,
        facets=tuple(facets),
        ordering=tuple(ideal.facet_order),
        steps=steps,
        failed_at=failed[0] if failed else None,
    )
    return not failed, certificate


def _bits(mask: int) -> Iterable[int]:
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def _exhaustive(cx: SimplicialComplex, oracle: _StepOracle) -> tuple[Optional[list[int]], int]:
    """Subset DP: find an ordering or prove that none exists.

    `dead` holds every placed-facet set from which no valid completion exists.
    """
    count = len(cx.facets)
    full = (1 << count) - 1
    dead: set[int] = set()
    explored = 0

    def extend(mask: int, order: list[int]) -> bool:
        nonlocal explored
        if mask == full:
            return True
        if mask in dead:
            return False
        explored += 1
        prefix = [cx.facets[i] for i in _bits(mask)]
        for index in range(count):
            if mask >> index & 1:
                continue
            if prefix and not oracle.check(prefix, cx.facets[index], len(prefix) + 1, index).ok:
                continue
            order.append(index)
            if extend(mask | 1 << index, order):
                return True
            order.pop()
        dead.add(mask)
        return False

    order: list[int] = []
    found = extend(0, order)
    return (order if found else None), explored


def greedy_shelling_order(
    cx: SimplicialComplex, method: Method | str = Method.DEFINITION
) -> ShellingCertificate:
    """Extend by the lexicographically first facet whose step test passes.

    Success is a valid shelling; getting stuck is INCONCLUSIVE, never a refutation.
    """
    method = Method(method)
    if cx.is_void:
        raise VoidComplexError("greedy_shelling_order")
    oracle = _StepOracle(method)
    order = [0]
    remaining = list(range(1, len(cx.facets)))
    while remaining:
        prefix = [cx.facets[i] for i in order]
        for index in remaining:
            if oracle.check(prefix, cx.facets[index], len(prefix) + 1, index).ok:
                order.append(index)
                remaining.remove(index)
                break
        else:
            logger.info("Greedy search stuck after %d of %d facets", len(order), len(cx.facets))
            return ShellingCertificate(
                verdict=ShellingVerdict.INCONCLUSIVE,
                method=method,
                facets=cx.facets,
                ordering=tuple(order),
                search="greedy",
                explored=len(order),
                disagreements=oracle.disagreements,
            )
    certificate = verify_ordering(cx, order, method)
    certificate.search = "greedy"
    certificate.explored = len(order)
    certificate.disagreements = _merge(oracle.disagreements, certificate.disagreements)
    return certificate


def find_shelling_order(
    cx: SimplicialComplex,
    method: Method | str = Method.DEFINITION,
    max_facets: int = DEFAULT_MAX_FACETS,
    heuristic: bool = False,
) -> ShellingCertificate:
    """Search for a shelling order.

    Up to `max_facets` facets the search is exhaustive and a failure is a
    refutation. Above the bound FacetBoundExceeded is raised unless
    `heuristic` allows the greedy search.
    """
    method = Method(method)
    if cx.is_void:
        raise VoidComplexError("find_shelling_order")
    count = len(cx.facets)
    if count > max_facets:
        if not heuristic:
            raise FacetBoundExceeded(count, max_facets)
        logger.info("%d facets above bound %d, using greedy search", count, max_facets)
        return greedy_shelling_order(cx, method)

    oracle = _StepOracle(method)
    order, explored = _exhaustive(cx, oracle)
    logger.debug("Exhaustive search over %d facets explored %d subsets", count, explored)
    if order is None:
        return ShellingCertificate(
            verdict=ShellingVerdict.NOT_SHELLABLE,
            method=method,
            facets=cx.facets,
            search="exhaustive",
            refutation=(
                f"exhaustive search over {explored} predecessor subsets of {count} facets "
                "found no valid extension to a full ordering"
            ),
            explored=explored,
            disagreements=oracle.disagreements,
        )
    certificate = verify_ordering(cx, order, method)
    certificate.search = "exhaustive"
    certificate.explored = explored
    certificate.disagreements = _merge(oracle.disagreements, certificate.disagreements)
    return certificate
