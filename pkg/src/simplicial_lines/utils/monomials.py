"""Squarefree monomials and ordered facet ideals.

Only supports matter: a squarefree monomial x_{i_1}...x_{i_k} is the set
{i_1, ..., i_k}, gcd is intersection and exact division is set difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .complexes import SimplicialComplex
from .errors import (
    ComplexError,
    NotADivisor,
    OrderingError,
    UnitMonomialError,
    VoidComplexError,
)

_VARIABLE = re.compile(r"x(\d+)")


@dataclass(frozen=True)
class Monomial:
    support: frozenset[int]

    @classmethod
    def of(cls, variables: Iterable[int]) -> "Monomial":
        return cls(frozenset(variables))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse "x1x2x5" (or "1" for the unit)."""
        text = text.replace("*", "").replace(" ", "")
        if text == "1":
            return cls(frozenset())
        if not text or _VARIABLE.sub("", text):
            raise ValueError(f"not a squarefree monomial: {text!r}")
        indices = [int(i) for i in _VARIABLE.findall(text)]
        if len(set(indices)) != len(indices):
            raise ValueError(f"not squarefree: {text!r}")
        return cls(frozenset(indices))

    @property
    def degree(self) -> int:
        return len(self.support)

    @property
    def is_unit(self) -> bool:
        return not self.support

    @property
    def is_linear(self) -> bool:
        return self.degree == 1

    def divides(self, other: "Monomial") -> bool:
        return self.support <= other.support

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(self.support | other.support)

    def sorted_support(self) -> list[int]:
        return sorted(self.support)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        return "".join(f"x{i}" for i in self.sorted_support())


def gcd_monomial(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(a.support & b.support)


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b, defined when b divides a."""
    if not b.divides(a):
        raise NotADivisor(f"{b} does not divide {a}")
    return Monomial(a.support - b.support)


def monomial_key(m: Monomial) -> tuple[int, list[int]]:
    return (m.degree, m.sorted_support())


def minimal_generators(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Members not strictly divisible by another member, sorted by degree then support."""
    unique = set(monomials)
    if any(m.is_unit for m in unique):
        raise UnitMonomialError("the unit monomial generates the whole ring")
    minimal = [
        m for m in unique if not any(other.support < m.support for other in unique)
    ]
    return sorted(minimal, key=monomial_key)


@dataclass(frozen=True)
class FacetIdeal:
    """I_F(Δ) with an ordered generator list m_1..m_r.

    `facet_order[i]` is the index, in the source complex, of the facet behind
    generator m_{i+1}.
    """

    variables: tuple[int, ...]
    generators: tuple[Monomial, ...]
    facet_order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def is_minimal_system(self) -> bool:
        return not any(
            a.divides(b)
            for i, a in enumerate(self.generators)
            for j, b in enumerate(self.generators)
            if i != j
        )

    def generator(self, position: int) -> Monomial:
        """m_position, 1-based."""
        if not 1 <= position <= len(self.generators):
            raise OrderingError(f"position {position} outside 1..{len(self.generators)}")
        return self.generators[position - 1]


FacetOrder = Sequence[Union[int, Sequence[int]]]


def resolve_order(cx: SimplicialComplex, order: FacetOrder | None) -> tuple[int, ...]:
    """Turn a facet permutation given as indices or vertex lists into indices."""
    if order is None:
        return tuple(range(len(cx.facets)))
    indices = []
    for item in order:
        if isinstance(item, int):
            if not 0 <= item < len(cx.facets):
                raise OrderingError(f"facet index {item} outside 0..{len(cx.facets) - 1}")
            indices.append(item)
        else:
            try:
                indices.append(cx.facet_index(item))
            except ComplexError as exc:
                raise OrderingError(str(exc)) from None
    if sorted(indices) != list(range(len(cx.facets))):
        raise OrderingError(
            f"ordering must list each of the {len(cx.facets)} facets exactly once"
        )
    return tuple(indices)


def facet_ideal(cx: SimplicialComplex, order: FacetOrder | None = None) -> FacetIdeal:
    """Generators x_F = Π_{v in F} x_v in the given facet order (default: sorted facets)."""
    if cx.is_void:
        raise VoidComplexError("facet_ideal")
    indices = resolve_order(cx, order)
    generators = tuple(Monomial.of(cx.facets[i]) for i in indices)
    return FacetIdeal(cx.vertices, generators, indices)


def residuals_against(prefix: Iterable[Monomial], target: Monomial) -> set[Monomial]:
    """{target / gcd(m, target) : m in prefix}."""
    return {quotient(target, gcd_monomial(m, target)) for m in prefix}


def residual_set(ideal: FacetIdeal, position: int) -> set[Monomial]:
    """Res(I_i) for 2 <= i <= r (1-based), deduplicated."""
    if not 2 <= position <= len(ideal.generators):
        raise OrderingError(f"residual position {position} outside 2..{len(ideal.generators)}")
    return residuals_against(ideal.generators[: position - 1], ideal.generator(position))
