import pytest
from hypothesis import given, settings

from simplicial_lines.utils.complexes import (
    anti_gallai_complex,
    complex_for,
    complex_from_generators,
    line_complex,
)
from simplicial_lines.utils.errors import (
    FacetBoundExceeded,
    NonMinimalSystemError,
    ParameterError,
    VoidComplexError,
)
from simplicial_lines.utils.graphs import (
    cycle_graph,
    friendship_graph,
    prism_graph,
    wheel_graph,
)
from simplicial_lines.utils.indices import IndexKind
from simplicial_lines.utils.monomials import FacetIdeal, Monomial, facet_ideal
from simplicial_lines.utils.orderings import (
    friendship_line_ordering,
    wheel_anti_gallai_ordering,
    wheel_line_ordering,
)
from simplicial_lines.utils.shelling import (
    Method,
    ShellingVerdict,
    find_shelling_order,
    greedy_shelling_order,
    has_linear_residuals,
    residual_step_ok,
    shelling_step_ok,
    step_linear,
    verify_ordering,
)
from strategies import simple_graphs

C5_ATTEMPT = [(1, 2, 3), (2, 3, 4), (1, 2, 5), (3, 4, 5), (1, 4, 5)]


class TestStepPredicates:
    def test_shared_edge_passes(self):
        ok, maximal = shelling_step_ok([(1, 2, 3)], (2, 3, 4))
        assert ok and maximal == [(2, 3)]

    def test_shared_vertex_fails(self):
        ok, maximal = shelling_step_ok([(1, 2, 3)], (3, 4, 5))
        assert not ok and maximal == [(3,)]

    def test_mixed_dimensions_fail(self):
        ok, maximal = shelling_step_ok([(1, 2, 3), (4, 5)], (2, 3, 4))
        assert not ok and maximal == [(4,), (2, 3)]

    def test_disjoint_points_pass(self):
        assert shelling_step_ok([(1,)], (2,))[0]
        assert residual_step_ok([(1,)], (2,))[0]

    def test_disjoint_edges_fail(self):
        assert not shelling_step_ok([(1, 2)], (3, 4))[0]
        ok, generators = residual_step_ok([(1, 2)], (3, 4))
        assert not ok and generators == [Monomial.of([3, 4])]

    def test_step_linear_on_cycle(self):
        ideal = facet_ideal(line_complex(cycle_graph(5)), C5_ATTEMPT)
        assert step_linear(ideal, 2)[0]
        assert step_linear(ideal, 3)[0]
        ok, generators = step_linear(ideal, 4)
        assert not ok
        assert [str(m) for m in generators] == ["x5", "x3x4"]


class TestVerifyOrdering:
    def test_cycle_attempt_fails_at_fourth_step(self):
        certificate = verify_ordering(line_complex(cycle_graph(5)), C5_ATTEMPT, Method.RESIDUALS)
        assert certificate.verdict is ShellingVerdict.INCONCLUSIVE
        assert certificate.failed_at == 4
        assert sorted(str(m) for m in certificate.steps[3].residuals) == ["x3x4", "x5"]

    def test_both_methods_record_evidence(self, triangle_with_pendant):
        cx = line_complex(triangle_with_pendant)
        certificate = verify_ordering(cx, [0, 1, 2], Method.BOTH)
        assert certificate.passed
        assert certificate.steps[1].intersections == ((1, 3),)
        assert certificate.steps[1].residuals == (Monomial.of([4]),)
        assert not certificate.disagreements

    def test_single_facet(self):
        cx = complex_from_generators([(1, 2, 3)])
        assert verify_ordering(cx, [0]).passed

    def test_void(self):
        with pytest.raises(VoidComplexError):
            verify_ordering(complex_from_generators([]), [])


class TestSearch:
    @pytest.mark.parametrize("method", list(Method))
    def test_cycle_is_not_shellable(self, method):
        certificate = find_shelling_order(line_complex(cycle_graph(5)), method)
        assert certificate.verdict is ShellingVerdict.NOT_SHELLABLE
        assert certificate.search == "exhaustive"
        assert certificate.refutation
        assert not certificate.disagreements

    @pytest.mark.parametrize("n", range(3, 9))
    def test_wheel_anti_gallai_shellable(self, n):
        cx = anti_gallai_complex(wheel_graph(n))
        certificate = find_shelling_order(cx, Method.BOTH)
        assert certificate.passed
        assert certificate.reverify(cx)

    @pytest.mark.parametrize("n", range(2, 5))
    def test_disconnected_or_pinched_anti_gallai(self, n):
        for g in (prism_graph(n), friendship_graph(n)):
            certificate = find_shelling_order(anti_gallai_complex(g))
            assert certificate.verdict is ShellingVerdict.NOT_SHELLABLE

    def test_wheel_line_search(self):
        cx = line_complex(wheel_graph(4))
        certificate = find_shelling_order(cx, Method.RESIDUALS)
        assert certificate.passed
        assert len(certificate.ordered_facets()) == len(cx)

    def test_bound_exceeded(self):
        cx = line_complex(friendship_graph(4))
        with pytest.raises(FacetBoundExceeded) as info:
            find_shelling_order(cx, max_facets=20)
        assert info.value.facet_count == 28

    def test_heuristic_above_bound(self):
        cx = line_complex(friendship_graph(4))
        certificate = find_shelling_order(cx, max_facets=20, heuristic=True)
        assert certificate.passed
        assert certificate.search == "greedy"

    def test_greedy_stuck_is_inconclusive(self):
        certificate = greedy_shelling_order(line_complex(cycle_graph(5)))
        assert certificate.verdict is ShellingVerdict.INCONCLUSIVE
        assert certificate.refutation is None

    def test_certificate_to_dict(self, triangle_with_pendant):
        data = find_shelling_order(line_complex(triangle_with_pendant)).to_dict()
        assert data["verdict"] == "SHELLABLE"
        assert data["ordering"] == [0, 1, 2]
        assert data["steps"][0] == {"position": 1, "facet": [1, 2, 3], "ok": True}


@settings(deadline=None)
@given(simple_graphs(max_n=5))
def test_definition_and_residuals_agree(g):
    for kind in IndexKind:
        cx = complex_for(g, kind)
        if cx.is_void:
            continue
        both = find_shelling_order(cx, Method.BOTH)
        residuals = find_shelling_order(cx, Method.RESIDUALS)
        assert both.verdict is residuals.verdict
        assert not both.disagreements


def test_has_linear_residuals():
    cx = line_complex(wheel_graph(4))
    ideal = facet_ideal(cx, wheel_line_ordering(4))
    ok, certificate = has_linear_residuals(ideal)
    assert ok and certificate.failed_at is None
    assert certificate.ordering == ideal.facet_order
    assert certificate.reverify(cx)


def test_residual_certificate_indexes_sorted_facets():
    cx = line_complex(cycle_graph(5))
    ok, certificate = has_linear_residuals(facet_ideal(cx, C5_ATTEMPT))
    assert not ok and certificate.failed_at == 4
    assert certificate.facets == cx.facets
    assert certificate.ordering == (0, 3, 1, 4, 2)
    assert certificate.steps[3].facet == (3, 4, 5)
    assert certificate.steps[3].facet_index == 4


def test_has_linear_residuals_needs_minimal_system():
    ideal = FacetIdeal((1, 2, 3), (Monomial.of([1, 2]), Monomial.of([1, 2, 3])), (0, 1))
    with pytest.raises(NonMinimalSystemError):
        has_linear_residuals(ideal)


class TestExplicitOrderings:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_friendship_line(self, n):
        cx = line_complex(friendship_graph(n))
        assert verify_ordering(cx, friendship_line_ordering(n)).passed

    @pytest.mark.parametrize("n", range(4, 9))
    def test_wheel_line(self, n):
        cx = line_complex(wheel_graph(n))
        assert verify_ordering(cx, wheel_line_ordering(n)).passed

    @pytest.mark.parametrize("n", range(4, 9))
    def test_wheel_anti_gallai(self, n):
        cx = anti_gallai_complex(wheel_graph(n))
        assert verify_ordering(cx, wheel_anti_gallai_ordering(n), Method.RESIDUALS).passed

    def test_small_wheel_rejected(self):
        with pytest.raises(ParameterError):
            wheel_line_ordering(3)
        with pytest.raises(ParameterError):
            wheel_anti_gallai_ordering(3)
