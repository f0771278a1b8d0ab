import json

import pytest

from simplicial_lines.app import build_parser, run
from simplicial_lines.commands import ExitCode
from simplicial_lines.utils.graphs import family_graph
from simplicial_lines.utils.orderings import friendship_line_ordering
from simplicial_lines.utils.serialize import write_graph
from simplicial_lines.utils.suites import SUITES, row
from simplicial_lines.utils.theorems import EulerDecompositionReport

C5_ATTEMPT = [[1, 2, 3], [2, 3, 4], [1, 2, 5], [3, 4, 5], [1, 4, 5]]


@pytest.fixture
def graph_file(tmp_path, config_dir):
    def write(text: str, name: str = "g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


@pytest.fixture
def family_file(tmp_path, config_dir):
    def make(family: str, param: int) -> str:
        path = tmp_path / f"{family}{param}.txt"
        write_graph(family_graph(family, param), path)
        return str(path)

    return make


def json_out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestGen:
    def test_writes_edgelist(self, tmp_path, config_dir):
        out = tmp_path / "w.txt"
        assert run(["gen", "wheel", "4", str(out)]) == ExitCode.OK
        assert out.read_text().splitlines()[0] == "5 8"

    def test_writes_json(self, tmp_path, config_dir):
        out = tmp_path / "f.json"
        assert run(["gen", "friendship", "2", str(out)]) == ExitCode.OK
        assert json.loads(out.read_text())["n"] == 5

    def test_bad_parameter(self, tmp_path, config_dir):
        assert run(["gen", "wheel", "2", str(tmp_path / "w.txt")]) == ExitCode.USAGE

    def test_unknown_family_is_a_usage_error(self, tmp_path, config_dir):
        with pytest.raises(SystemExit) as info:
            run(["gen", "petersen", "1", str(tmp_path / "p.txt")])
        assert info.value.code == 2


class TestAnalyze:
    def test_pendant_json(self, graph_file, capsys):
        path = graph_file("4 4\n1 2\n1 3\n2 3\n3 4\n")
        assert run(["analyze", path, "--format", "json"]) == ExitCode.OK
        data = json_out(capsys)
        line, gallai, anti = data["complexes"]
        assert line["facets"] == [[1, 2, 3], [1, 3, 4], [2, 3, 4]]
        assert gallai["facets"] == [[1, 2], [1, 3, 4], [2, 3, 4]]
        assert (line["euler"], gallai["euler"], len(anti["facets"])) == (1, 0, 1)
        assert data["theorems"]["t2"]["verdict"] == "PASS"

    def test_selected_complex(self, graph_file, capsys):
        path = graph_file("3 2\n1 2\n2 3\n")
        assert run(["analyze", path, "--complex", "gallai", "--format", "json"]) == ExitCode.OK
        assert [b["kind"] for b in json_out(capsys)["complexes"]] == ["gallai"]

    def test_text_report(self, family_file, capsys):
        path = family_file("wheel", 5)
        assert run(["analyze", path]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "n=6" in out and "PASS" in out

    def test_missing_file(self, tmp_path, config_dir):
        assert run(["analyze", str(tmp_path / "absent.txt")]) == ExitCode.USAGE

    def test_malformed_file(self, graph_file):
        assert run(["analyze", graph_file("3 2\n1 2\n")]) == ExitCode.USAGE

    def test_duplicate_edges(self, graph_file):
        path = graph_file("3 2\n1 2\n2 1\n")
        assert run(["analyze", path]) == ExitCode.USAGE
        assert run(["analyze", path, "--dedupe"]) == ExitCode.OK

    def test_undecodable_file(self, tmp_path, config_dir):
        path = tmp_path / "g.txt"
        path.write_bytes(b"\xff\xfe 3\n")
        assert run(["analyze", str(path)]) == ExitCode.USAGE
        assert run(["shell", str(path)]) == ExitCode.USAGE

    def test_boolean_vertex_count(self, graph_file):
        path = graph_file('{"n": true, "edges": []}', name="g.json")
        assert run(["analyze", path, "--format", "json"]) == ExitCode.USAGE

    def test_json_is_deterministic(self, family_file, capsys):
        path = family_file("prism", 3)
        run(["analyze", path, "--format", "json"])
        first = capsys.readouterr().out
        run(["analyze", path, "--format", "json"])
        assert capsys.readouterr().out == first

    def test_text_and_json_agree(self, family_file, capsys, monkeypatch):
        monkeypatch.setenv("COLUMNS", "400")
        path = family_file("wheel", 5)
        run(["analyze", path, "--format", "json"])
        data = json_out(capsys)
        run(["analyze", path])
        text = capsys.readouterr().out
        graph = data["graph"]
        assert f"n={graph['n']}  m={graph['m']}  triangles={graph['triangles']}" in text
        for block in data["complexes"]:
            assert "(" + ", ".join(map(str, block["f_vector"])) + ")" in text
        t2 = data["theorems"]["t2"]
        assert f"χ(Δ_L)={t2['line_euler']}  χ(Δ_Γ)={t2['gallai_euler']}" in text
        assert f"|Ω_Γ′|={t2['anti_gallai_count']}" in text

    def test_failing_verdict_exit_code(self, family_file, capsys, monkeypatch):
        monkeypatch.setattr(
            "simplicial_lines.utils.analysis.theorem_t2_check",
            lambda graph: EulerDecompositionReport(line_euler=1, gallai_euler=0, anti_gallai_count=0),
        )
        path = family_file("wheel", 4)
        assert run(["analyze", path, "--format", "json"]) == ExitCode.THEOREM_FAIL
        assert json_out(capsys)["theorems"]["t2"]["verdict"] == "FAIL"


class TestShell:
    def test_cycle_is_not_shellable(self, family_file, capsys):
        path = family_file("cycle", 5)
        assert run(["shell", path, "--format", "json"]) == ExitCode.NOT_SHELLABLE
        data = json_out(capsys)
        assert data["verdict"] == "NOT_SHELLABLE"
        assert data["refutation"]

    def test_shellable_wheel_anti_gallai(self, family_file, capsys):
        path = family_file("wheel", 6)
        code = run(["shell", path, "--complex", "anti-gallai", "--method", "residuals", "--format", "json"])
        assert code == ExitCode.OK
        assert len(json_out(capsys)["ordering"]) == 6

    def test_verify_failing_ordering(self, family_file, tmp_path, capsys):
        path = family_file("cycle", 5)
        ordering = tmp_path / "order.json"
        ordering.write_text(json.dumps(C5_ATTEMPT))
        code = run(["shell", path, "--mode", "verify", "--ordering-file", str(ordering), "--format", "json"])
        assert code == ExitCode.INCONCLUSIVE
        assert json_out(capsys)["failed_at"] == 4

    def test_verify_needs_ordering(self, family_file):
        assert run(["shell", family_file("cycle", 5), "--mode", "verify"]) == ExitCode.USAGE

    def test_bad_ordering_file(self, family_file, tmp_path):
        ordering = tmp_path / "order.json"
        ordering.write_text('{"first": 0}')
        args = ["shell", family_file("cycle", 5), "--mode", "verify", "--ordering-file", str(ordering)]
        assert run(args) == ExitCode.USAGE

    def test_bound_exceeded(self, family_file):
        assert run(["shell", family_file("friendship", 4)]) == ExitCode.BOUND_EXCEEDED

    def test_heuristic_above_bound(self, family_file, capsys):
        path = family_file("friendship", 4)
        assert run(["shell", path, "--heuristic", "--format", "json"]) == ExitCode.OK
        assert json_out(capsys)["search"] == "greedy"

    def test_ordering_file_above_bound(self, family_file, tmp_path):
        ordering = tmp_path / "order.json"
        ordering.write_text(json.dumps([list(f) for f in friendship_line_ordering(4)]))
        path = family_file("friendship", 4)
        assert run(["shell", path, "--ordering-file", str(ordering)]) == ExitCode.OK

    def test_bound_from_environment(self, family_file, monkeypatch):
        path = family_file("wheel", 4)
        monkeypatch.setenv("SL_MAX_FACETS", "5")
        assert run(["shell", path]) == ExitCode.BOUND_EXCEEDED
        assert run(["shell", path, "--max-facets", "10"]) == ExitCode.OK

    def test_void_complex(self, family_file):
        assert run(["shell", family_file("cycle", 4), "--complex", "anti-gallai"]) == ExitCode.USAGE


class TestVerify:
    def test_single_suite(self, config_dir, capsys):
        assert run(["verify", "--suite", "pendant-triangle", "--format", "json"]) == ExitCode.OK
        data = json_out(capsys)
        assert data["passed"]
        assert [s["suite"] for s in data["suites"]] == ["pendant-triangle"]

    def test_text_summary(self, config_dir, capsys):
        assert run(["verify", "--suite", "euler-exhaustive", "--max-n", "4"]) == ExitCode.OK
        assert "PASS" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "alias, name", [("t2-exhaustive", "euler-exhaustive"), ("t1-exhaustive", "connectedness-exhaustive")]
    )
    def test_suite_alias(self, config_dir, capsys, alias, name):
        assert run(["verify", "--suite", alias, "--max-n", "3", "--format", "json"]) == ExitCode.OK
        assert [s["suite"] for s in json_out(capsys)["suites"]] == [name]

    def test_failing_row_exit_code(self, config_dir, monkeypatch):
        description, _ = SUITES["pendant-triangle"]
        monkeypatch.setitem(SUITES, "pendant-triangle", (description, lambda ctx: [row("mismatch", 1, 2)]))
        assert run(["verify", "--suite", "pendant-triangle"]) == ExitCode.THEOREM_FAIL


class TestConfiguration:
    def test_bad_environment_bound(self, config_dir, monkeypatch, tmp_path):
        monkeypatch.setenv("SL_MAX_FACETS", "many")
        assert run(["gen", "path", "3", str(tmp_path / "p.txt")]) == ExitCode.USAGE

    def test_config_file_format(self, config_dir, family_file, capsys):
        (config_dir / "config.json").write_text(json.dumps({"output_format": "json"}))
        path = family_file("star", 3)
        assert run(["shell", path]) == ExitCode.OK
        assert json_out(capsys)["verdict"] == "SHELLABLE"

    def test_non_positive_flag(self, family_file):
        assert run(["shell", family_file("star", 3), "--max-facets", "0"]) == ExitCode.USAGE

    def test_corpus_limit_above_cap(self, config_dir):
        (config_dir / "config.json").write_text(json.dumps({"corpus_limit": 8}))
        assert run(["verify", "--suite", "euler-exhaustive", "--max-n", "8"]) == ExitCode.USAGE


def test_parser_lists_every_suite():
    parser = build_parser()
    args = parser.parse_args(["verify", "--suite", "oracle-equivalence"])
    assert args.suite == "oracle-equivalence"
    assert args.max_facets is None
