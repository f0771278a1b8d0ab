import pytest

from simplicial_lines.utils.suites import SUITE_ALIASES, SUITES, SuiteContext, row, run_suite, run_suites, tally
from simplicial_lines.utils.graphs import enumerate_graphs
from simplicial_lines.utils.theorems import Verdict

# small bounds keep every suite quick; the defaults are exercised by `simplicial-lines verify`
SMALL = SuiteContext(max_n=4)


@pytest.mark.parametrize("name", [n for n in SUITES if n != "oracle-equivalence"])
def test_suite_passes_with_small_bounds(name):
    result = run_suite(name, SMALL)
    assert result.rows
    failing = [r.to_dict() for r in result.rows if r.verdict is Verdict.FAIL]
    assert not failing


def test_oracle_equivalence_on_small_corpus():
    (result,) = run_suites(["oracle-equivalence"], SuiteContext(max_n=3))
    assert not result.failed


def test_pendant_triangle_values():
    result = run_suite("pendant-triangle", SuiteContext())
    rows = {r.case: r for r in result.rows}
    assert rows["Δ_L facets"].computed == "123 134 234"
    assert rows["χ(Δ_Γ)"].computed == "0"


def test_row_and_tally_verdicts():
    assert row("same", 3, 3).verdict is Verdict.PASS
    assert row("different", 3, 4).verdict is Verdict.FAIL
    failing = tally("no edges", enumerate_graphs(2), lambda g: g.m == 0)
    assert failing.verdict is Verdict.FAIL
    assert failing.computed.startswith("1 of 2 fail")


def test_registry_order():
    assert list(SUITES)[0] == "family-counts"
    assert "f-vector-oracle" in SUITES


def test_aliases_resolve_to_registered_suites():
    assert set(SUITE_ALIASES.values()) <= set(SUITES)
    assert run_suite("t2-exhaustive", SuiteContext(max_n=3)).name == "euler-exhaustive"
