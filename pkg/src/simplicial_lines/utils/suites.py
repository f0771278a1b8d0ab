"""Verification suites: expected versus computed values for the known families,
exhaustive small-graph corpora and the two shellability criteria."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .complexes import (
    SimplicialComplex,
    anti_gallai_complex,
    brute_force_f_vector,
    complex_for,
    connected_components,
    dimension,
    euler_characteristic,
    excision_holds,
    f_vector,
    gallai_complex,
    is_pure,
    is_spanning_subcomplex,
    line_complex,
)
from .derived import adjacency_partition_holds, anti_gallai_graph, gallai_graph, line_graph
from .graphs import (
    CORPUS_LIMIT,
    SimpleGraph,
    corpus,
    cycle_graph,
    enumerate_graphs,
    friendship_graph,
    is_connected_graph,
    make_graph,
    path_graph,
    prism_graph,
    star_graph,
    triangles,
    wheel_graph,
)
from .indices import IndexKind, anti_gallai_indices, gallai_indices, line_indices
from .orderings import friendship_line_ordering, wheel_anti_gallai_ordering, wheel_line_ordering
from .serialize import EDGELIST, JSON, parse_graph, serialize_graph
from .shelling import (
    DEFAULT_MAX_FACETS,
    Method,
    ShellingCertificate,
    ShellingVerdict,
    find_shelling_order,
    verify_ordering,
)
from .theorems import Verdict, theorem_t1_check, theorem_t2_check

logger = logging.getLogger(__name__)

PENDANT_TRIANGLE_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4)]

# complexes with more facets are left out of the oracle comparison
ORACLE_FACET_LIMIT = 15


@dataclass(frozen=True)
class SuiteRow:
    case: str
    expected: str
    computed: str
    verdict: Verdict

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict.value,
        }


@dataclass
class SuiteResult:
    name: str
    description: str
    rows: list[SuiteRow] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(r.verdict is Verdict.FAIL for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "description": self.description,
            "passed": not self.failed,
            "rows": [r.to_dict() for r in self.rows],
        }


@dataclass(frozen=True)
class SuiteContext:
    max_n: Optional[int] = None
    max_facets: int = DEFAULT_MAX_FACETS
    corpus_limit: int = CORPUS_LIMIT

    def bound(self, default: int) -> int:
        return default if self.max_n is None else self.max_n


def row(case: str, expected, computed) -> SuiteRow:
    verdict = Verdict.PASS if expected == computed else Verdict.FAIL
    return SuiteRow(case, str(expected), str(computed), verdict)


def tally(case: str, graphs: Iterable[SimpleGraph], check: Callable[[SimpleGraph], bool]) -> SuiteRow:
    """One row for a whole corpus: how many graphs satisfy `check`."""
    total = 0
    failures: list[SimpleGraph] = []
    for graph in graphs:
        total += 1
        if not check(graph):
            failures.append(graph)
    if failures:
        first = failures[0]
        logger.error("%s fails on %d graphs, first: n=%d edges=%s", case, len(failures), first.n, list(first.edge_list))
        computed = f"{len(failures)} of {total} fail, first n={first.n} edges={list(first.edge_list)}"
        return SuiteRow(case, f"all {total} hold", computed, Verdict.FAIL)
    return SuiteRow(case, f"all {total} hold", f"all {total} hold", Verdict.PASS)


SuiteFunc = Callable[[SuiteContext], list[SuiteRow]]
SUITES: dict[str, tuple[str, SuiteFunc]] = {}
# Alternate names accepted by --suite; "all" runs each suite once under its main name.
SUITE_ALIASES: dict[str, str] = {}


def suite(name: str, description: str, aliases: tuple[str, ...] = ()):
    def register(func: SuiteFunc) -> SuiteFunc:
        SUITES[name] = (description, func)
        for alias in aliases:
            SUITE_ALIASES[alias] = name
        return func

    return register


def _corpus(ctx: SuiteContext, default: int, min_degree: int) -> list[SimpleGraph]:
    return list(corpus(ctx.bound(default), min_degree, ctx.corpus_limit))


def _brute_force_triangles(graph: SimpleGraph) -> list[tuple[int, int, int]]:
    return [
        t for t in combinations(graph.vertices, 3)
        if all(graph.has_edge(a, b) for a, b in combinations(t, 2))
    ]


def _facets(cx: SimplicialComplex) -> str:
    return " ".join("".join(map(str, f)) for f in cx.facets) or "void"


@suite("family-counts", "edge and triangle counts of the named families, file round trips")
def family_counts(ctx: SuiteContext) -> list[SuiteRow]:
    top = ctx.bound(8)
    rows = []
    for n in range(3, top + 1):
        g = wheel_graph(n)
        rows.append(row(f"wheel {n}: edges", 2 * n, g.m))
        if n >= 4:
            rows.append(row(f"wheel {n}: triangles", n, len(triangles(g))))
    for n in range(1, top + 1):
        g = friendship_graph(n)
        rows.append(row(f"friendship {n}: edges", 3 * n, g.m))
        rows.append(row(f"friendship {n}: hub degree", 2 * n, g.degree(2 * n + 1)))
    for n in range(1, top + 1):
        g = prism_graph(n)
        layers = [(3 * k + 1, 3 * k + 2, 3 * k + 3) for k in range(n)]
        rows.append(row(f"prism {n}: edges", 3 * (2 * n - 1), g.m))
        rows.append(row(f"prism {n}: triangles", layers, triangles(g)))
    families = [wheel_graph(5), friendship_graph(3), prism_graph(3), cycle_graph(6), star_graph(4)]
    for g in families:
        for fmt in (EDGELIST, JSON):
            rows.append(row(f"round trip {fmt} n={g.n} m={g.m}", True, parse_graph(serialize_graph(g, fmt), fmt) == g))
    return rows


@suite("derived-partition", "Γ and Γ′ partition L, triangle listing, triangle-free coincidence")
def derived_partition(ctx: SuiteContext) -> list[SuiteRow]:
    graphs = _corpus(ctx, 5, 0)

    def labels_match(g: SimpleGraph) -> bool:
        return len(line_graph(g).labels) == g.m

    def triangle_free_case(g: SimpleGraph) -> bool:
        if triangles(g):
            return True
        return gallai_graph(g).adjacency == line_graph(g).adjacency and not anti_gallai_graph(g).adjacency

    return [
        tally("Γ and Γ′ partition the adjacency of L", graphs, adjacency_partition_holds),
        tally("|V(L(G))| = |E(G)|", graphs, labels_match),
        tally("triangles agree with brute force", graphs, lambda g: triangles(g) == _brute_force_triangles(g)),
        tally("triangle-free: Γ = L and Γ′ empty", graphs, triangle_free_case),
        tally("Ω_Γ′ equals the triangle set", graphs, lambda g: anti_gallai_indices(g).members == set(triangles(g))),
    ]


@suite("wheel-euler", "χ(Δ_L(W_{n+1})) = n+1 and α_1 = α_2 = n(n+1)/2")
def wheel_euler(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for n in range(4, ctx.bound(12) + 1):
        fv = f_vector(line_complex(wheel_graph(n)))
        half = n * (n + 1) // 2
        expected = (n + 1, half, half)
        rows.append(row(f"W_{n + 1}: (χ, α1, α2)", expected, (fv.euler_characteristic, fv[1], fv[2])))
    return rows


@suite("wheel-decomposition", "χ(Δ_Γ(W_{n+1})) = 1 and |Ω_Γ′(W_{n+1})| = n")
def wheel_decomposition(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for n in range(4, ctx.bound(12) + 1):
        g = wheel_graph(n)
        computed = (euler_characteristic(gallai_complex(g)), len(anti_gallai_indices(g)))
        rows.append(row(f"W_{n + 1}: (χ(Δ_Γ), |Ω_Γ′|)", (1, n), computed))
    return rows


@suite("friendship", "χ(Δ_Γ(F_n)) = 1-n, χ(Δ_L(F_n)) = 1, |Ω_Γ′| = n, α_2(Δ_Γ) = 2n(n-1)")
def friendship(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for n in range(2, ctx.bound(10) + 1):
        g = friendship_graph(n)
        gallai = f_vector(gallai_complex(g))
        computed = (
            gallai.euler_characteristic,
            euler_characteristic(line_complex(g)),
            len(anti_gallai_indices(g)),
            gallai[2],
        )
        rows.append(row(f"F_{n}: (χ(Δ_Γ), χ(Δ_L), |Ω_Γ′|, α2(Δ_Γ))", (1 - n, 1, n, 2 * n * (n - 1)), computed))
    return rows


@suite("pendant-triangle", "triangle with a pendant edge: facet lists and Euler characteristics")
def pendant_triangle(ctx: SuiteContext) -> list[SuiteRow]:
    g = make_graph(4, PENDANT_TRIANGLE_EDGES)
    line, gallai = line_complex(g), gallai_complex(g)
    return [
        row("Δ_L facets", "123 134 234", _facets(line)),
        row("χ(Δ_L)", 1, euler_characteristic(line)),
        row("f(Δ_L)", (4, 6, 3), f_vector(line).counts),
        row("Δ_Γ facets", "12 134 234", _facets(gallai)),
        row("χ(Δ_Γ)", 0, euler_characteristic(gallai)),
        row("|Ω_Γ′|", 1, len(anti_gallai_indices(g))),
        row("Δ_Γ spanning subcomplex of Δ_L", True, is_spanning_subcomplex(gallai, line)),
        row("decomposition", Verdict.PASS.value, theorem_t2_check(g).verdict.value),
    ]


@suite("euler-exhaustive", "χ(Δ_L) = χ(Δ_Γ) + |Ω_Γ′| on every graph without isolated vertices",
       aliases=("t2-exhaustive",))
def euler_exhaustive(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for n in range(1, ctx.bound(5) + 1):
        graphs = enumerate_graphs(n, 1, ctx.corpus_limit)
        rows.append(tally(f"n={n}", graphs, lambda g: theorem_t2_check(g).verdict is Verdict.PASS))
    return rows


@suite("connectedness-exhaustive", "G connected iff Δ_L(G) connected, on every graph without isolated vertices",
       aliases=("t1-exhaustive",))
def connectedness_exhaustive(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for n in range(1, ctx.bound(5) + 1):
        graphs = enumerate_graphs(n, 1, ctx.corpus_limit)
        rows.append(tally(f"n={n}", graphs, lambda g: theorem_t1_check(g).verdict is Verdict.PASS))
    return rows


def _search(cx: SimplicialComplex, ctx: SuiteContext, method: Method = Method.DEFINITION) -> ShellingCertificate:
    return find_shelling_order(cx, method, max_facets=ctx.max_facets, heuristic=True)


@suite("shellability", "shelling verdicts and explicit orderings for the families")
def shellability(ctx: SuiteContext) -> list[SuiteRow]:
    top = ctx.bound(12)
    shellable = ShellingVerdict.SHELLABLE.value
    not_shellable = ShellingVerdict.NOT_SHELLABLE.value
    rows = []
    for n in range(2, min(5, top) + 1):
        cx = line_complex(friendship_graph(n))
        certificate = _search(cx, ctx)
        rows.append(row(f"Δ_L(F_{n}) search", shellable, certificate.verdict.value))
        rows.append(row(f"Δ_L(F_{n}) certificate re-verifies", True, certificate.reverify(cx)))
    for n in range(2, min(8, top) + 1):
        cx = line_complex(friendship_graph(n))
        rows.append(row(f"Δ_L(F_{n}) lexicographic order", shellable,
                        verify_ordering(cx, friendship_line_ordering(n)).verdict.value))
    for n in range(4, min(8, top) + 1):
        cx = line_complex(wheel_graph(n))
        rows.append(row(f"Δ_L(W_{n + 1}) spokes-then-rim order", shellable,
                        verify_ordering(cx, wheel_line_ordering(n)).verdict.value))
        if len(cx) <= ctx.max_facets:
            rows.append(row(f"Δ_L(W_{n + 1}) search", shellable, _search(cx, ctx).verdict.value))
    for n in range(3, min(12, top) + 1):
        cx = anti_gallai_complex(wheel_graph(n))
        rows.append(row(f"Δ_Γ′(W_{n + 1}) search", shellable, _search(cx, ctx).verdict.value))
        if n >= 4:
            rows.append(row(f"Δ_Γ′(W_{n + 1}) rim order", shellable,
                            verify_ordering(cx, wheel_anti_gallai_ordering(n)).verdict.value))

    c5 = line_complex(cycle_graph(5))
    rows.append(row("Δ_L(C_5) search", not_shellable, _search(c5, ctx).verdict.value))
    attempt = verify_ordering(c5, [(1, 2, 3), (2, 3, 4), (1, 2, 5), (3, 4, 5), (1, 4, 5)], Method.RESIDUALS)
    residuals = sorted(str(m) for m in attempt.steps[3].residuals)
    rows.append(row("Δ_L(C_5) order 123,234,125,345: failing step", 4, attempt.failed_at))
    rows.append(row("Δ_L(C_5) order 123,234,125,345: residuals", ["x3x4", "x5"], residuals))

    for n in range(2, min(8, top) + 1):
        rows.append(row(f"Δ_Γ′(Y_3,{n}) search", not_shellable,
                        _search(anti_gallai_complex(prism_graph(n)), ctx).verdict.value))
        rows.append(row(f"Δ_Γ′(F_{n}) search", not_shellable,
                        _search(anti_gallai_complex(friendship_graph(n)), ctx).verdict.value))
    return rows


def _oracle_targets(ctx: SuiteContext) -> Iterable[tuple[str, SimplicialComplex]]:
    for g in _corpus(ctx, 5, 0):
        for kind in IndexKind:
            cx = complex_for(g, kind)
            if not cx.is_void:
                yield f"n={g.n} {kind.value}", cx
    families = [("F", friendship_graph, range(2, 9)), ("W", wheel_graph, range(3, 13)), ("Y", prism_graph, range(2, 9))]
    for label, generator, params in families:
        for n in params:
            g = generator(n)
            for kind in IndexKind:
                cx = complex_for(g, kind)
                if not cx.is_void and len(cx) <= ORACLE_FACET_LIMIT:
                    yield f"{label}{n} {kind.value}", cx
    yield "C5 line", line_complex(cycle_graph(5))


@suite("oracle-equivalence", "shelling definition and linear residuals agree per step and per verdict")
def oracle_equivalence(ctx: SuiteContext) -> list[SuiteRow]:
    seen: set[tuple] = set()
    checked = 0
    verdict_mismatch: list[str] = []
    step_mismatch: list[str] = []
    for case, cx in _oracle_targets(ctx):
        if cx.facets in seen:
            continue
        seen.add(cx.facets)
        checked += 1
        both = find_shelling_order(cx, Method.BOTH, max_facets=ORACLE_FACET_LIMIT)
        residuals = find_shelling_order(cx, Method.RESIDUALS, max_facets=ORACLE_FACET_LIMIT)
        if both.verdict is not residuals.verdict:
            verdict_mismatch.append(f"{case} {_facets(cx)}")
        if both.disagreements:
            step_mismatch.append(f"{case} {_facets(cx)}")
    if step_mismatch:
        logger.error("Per-step disagreement on %d complexes; compare whole orderings instead", len(step_mismatch))
    return [
        row(f"verdict agreement over {checked} distinct complexes", [], verdict_mismatch),
        row(f"per-step agreement over {checked} distinct complexes", [], step_mismatch),
    ]


@suite("triangle-free", "triangle-free graphs: Δ_L = Δ_Γ and Ω_Γ′ = ∅; Δ_L(F_n) = Δ_L(S_{2n})")
def triangle_free(ctx: SuiteContext) -> list[SuiteRow]:
    def coincide(g: SimpleGraph) -> bool:
        if triangles(g):
            return True
        return (
            line_complex(g) == gallai_complex(g)
            and line_indices(g).members == gallai_indices(g).members
            and not anti_gallai_indices(g).members
        )

    instances = [cycle_graph(n) for n in range(4, 7)] + [path_graph(n) for n in range(1, 7)]
    instances += [star_graph(k) for k in range(1, 6)]
    rows = [
        tally("cycle, path and star instances", instances, coincide),
        tally(f"triangle-free corpus up to n={ctx.bound(6)}", _corpus(ctx, 6, 0), coincide),
    ]
    for n in range(2, 9):
        rows.append(row(f"Δ_L(F_{n}) = Δ_L(S_{2 * n})", True,
                        line_complex(friendship_graph(n)) == line_complex(star_graph(2 * n))))
    return rows


@suite("excision", "χ is additive over components; components of Δ_L match components of G")
def excision(ctx: SuiteContext) -> list[SuiteRow]:
    graphs = _corpus(ctx, 5, 0)
    covered = [g for g in graphs if g.min_degree >= 1]

    def additive(g: SimpleGraph) -> bool:
        return all(excision_holds(cx) for cx in (complex_for(g, k) for k in IndexKind) if not cx.is_void)

    def components_match(g: SimpleGraph) -> bool:
        return len(connected_components(line_complex(g))) == len(g.connected_components())

    def pure_when_connected(g: SimpleGraph) -> bool:
        if g.n < 4 or not is_connected_graph(g):
            return True
        cx = line_complex(g)
        return is_pure(cx) and dimension(cx) == 2

    return [
        tally("χ additive over components", graphs, additive),
        tally("component count of Δ_L equals that of G", covered, components_match),
        tally("connected G on n >= 4 gives pure Δ_L of dimension 2", covered, pure_when_connected),
    ]


@suite("f-vector-oracle", "f-vector against the all-subsets brute force")
def f_vector_oracle(ctx: SuiteContext) -> list[SuiteRow]:
    def agrees(g: SimpleGraph) -> bool:
        return all(
            f_vector(cx) == brute_force_f_vector(cx)
            for cx in (complex_for(g, k) for k in IndexKind)
            if not cx.is_void
        )

    return [tally("f_vector = brute force", _corpus(ctx, 5, 0), agrees)]


def resolve_suite(name: str) -> str:
    return SUITE_ALIASES.get(name, name)


def run_suite(name: str, ctx: SuiteContext) -> SuiteResult:
    name = resolve_suite(name)
    description, func = SUITES[name]
    logger.info("Running suite %s", name)
    result = SuiteResult(name, description, func(ctx))
    logger.info("Suite %s: %d rows, %s", name, len(result.rows), "FAIL" if result.failed else "PASS")
    return result


def run_suites(names: Iterable[str], ctx: SuiteContext) -> list[SuiteResult]:
    """Run suites in the given order; results keep that order."""
    return [run_suite(name, ctx) for name in names]
