"""Explicit shelling orders for the friendship and wheel families."""

from __future__ import annotations

from itertools import combinations

from .complexes import Face
from .errors import ParameterError


def friendship_line_ordering(n: int) -> list[Face]:
    """Δ_L(F_n): all {i, j, 2n+1}, 1 <= i < j <= 2n, lexicographically."""
    if n < 1:
        raise ParameterError(f"friendship ordering needs n >= 1, got {n}")
    hub = 2 * n + 1
    return [(i, j, hub) for i, j in combinations(range(1, hub), 2)]


def wheel_line_ordering(n: int) -> list[Face]:
    """Δ_L(W_{n+1}), n >= 4.

    Spoke facets {i, j, n+1} lexicographically, then the rim triples
    {j, j+1, j+2} for j = 1..n-2, then {n-1, n, 1} and {n, 1, 2}.
    """
    if n < 4:
        raise ParameterError(f"wheel line ordering needs n >= 4, got {n}")
    hub = n + 1
    spokes = [(i, j, hub) for i, j in combinations(range(1, hub), 2)]
    rim = [(j, j + 1, j + 2) for j in range(1, n - 1)]
    rim += [(1, n - 1, n), (1, 2, n)]
    return spokes + rim


def wheel_anti_gallai_ordering(n: int) -> list[Face]:
    """Δ_Γ′(W_{n+1}) in rim order: {i, i+1, n+1} for i = 1..n-1, then {1, n, n+1}.

    For n = 3 the rim itself is a fourth triangle, so the order starts at n = 4.
    """
    if n < 4:
        raise ParameterError(f"wheel anti-Gallai ordering needs n >= 4, got {n}")
    hub = n + 1
    return [(i, i + 1, hub) for i in range(1, n)] + [(1, n, hub)]
