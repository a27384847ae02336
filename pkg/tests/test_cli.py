"""CLI behavior: formats, piping, exit codes, cross-process determinism."""

import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from tdchrom import complete, cycle, isomorphic, parse_graph6, write_graph6
from tdchrom.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run_ok(runner, args, **kwargs):
    result = runner.invoke(main, args, **kwargs)
    assert result.exit_code == 0, result.output
    return result.output


class TestInvariants:
    def test_family_specs(self, runner):
        out = run_ok(runner, ["invariants", "cycle:6", "path:4", "friendship:2"])
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert [r["tdc"] for r in rows] == [4, 3, 3]
        assert rows[1]["chi"] == 2

    def test_stdin_graph6(self, runner):
        g6 = write_graph6(cycle(5))
        out = run_ok(runner, ["invariants", "-"], input=g6 + "\n")
        assert json.loads(out)["tdc"] == 4

    def test_edge_list_file(self, runner, tmp_path):
        f = tmp_path / "graph.edges"
        f.write_text("4 3\n0 1\n1 2\n2 3\n")
        out = run_ok(runner, ["invariants", str(f)])
        assert json.loads(out)["tdc"] == 3

    def test_table_format(self, runner):
        out = run_ok(runner, ["invariants", "path:4", "--format", "table"])
        assert "tdc" in out and "graph6" in out

    def test_bad_input_exits_2(self, runner):
        result = runner.invoke(main, ["invariants", "nonsense!!"])
        assert result.exit_code == 2

    def test_undefined_is_rendered_not_fatal(self, runner):
        out = run_ok(runner, ["invariants", "complete:1"])
        assert json.loads(out)["tdc"] == "undefined"


class TestBuild:
    def test_corona_pipe(self, runner):
        g6 = run_ok(runner, ["build", "ncorona", "path:4", "path:3"]).strip()
        assert parse_graph6(g6).n == 16

    def test_glue_remark_instance(self, runner):
        g6 = run_ok(runner, ["build", "glue", "complete:4", "complete:5",
                             "--r", "4"]).strip()
        assert g6 == write_graph6(complete(5))

    def test_complement_self_complementary(self, runner):
        g6 = run_ok(runner, ["build", "complement", "cycle:5"]).strip()
        assert isomorphic(parse_graph6(g6), cycle(5))

    def test_shell_pipeline(self):
        pipeline = (
            f"{sys.executable} -m tdchrom.cli build ncorona path:4 path:3"
            f" | {sys.executable} -m tdchrom.cli invariants -"
        )
        out = subprocess.run(
            pipeline, shell=True, capture_output=True, text=True, check=True
        )
        data = json.loads(out.stdout)
        assert data["n"] == 16 and data["tdc"] == 5


class TestPerturb:
    def test_stability(self, runner):
        out = run_ok(runner, ["perturb", "path:6", "--kind", "stability"])
        assert json.loads(out)["value"] == 1

    def test_bondage(self, runner):
        out = run_ok(runner, ["perturb", "cycle:10", "--kind", "bondage"])
        assert json.loads(out)["value"] == 2

    def test_balanced_bipartite(self, runner):
        out = run_ok(
            runner, ["perturb", "complete_bipartite:3:3", "--kind", "stability"]
        )
        assert json.loads(out)["value"] == 3

    def test_undefined_base_exits_5(self, runner):
        result = runner.invoke(main, ["perturb", "complete:1", "--kind", "stability"])
        assert result.exit_code == 5

    def test_cap_exits_3(self, runner):
        result = runner.invoke(main, ["perturb", "cycle:13", "--kind", "stability"])
        assert result.exit_code == 3

    def test_trace(self, runner):
        out = run_ok(runner, ["trace", "cycle:4", "--kind", "stability"])
        lines = out.strip().split("\n")
        assert json.loads(lines[0])["base_value"] == 2
        assert len(lines) == 5


class TestVerify:
    def test_none_claims_empty_report(self, runner):
        out = run_ok(runner, ["verify", "--claims", "none"])
        lines = out.strip().split("\n")
        assert json.loads(lines[0])["type"] == "config"
        assert json.loads(lines[-1])["rows"] == 0

    def test_formula_section_clean_exit(self, runner, tmp_path):
        report = tmp_path / "report.jsonl"
        run_ok(runner, ["verify", "--claims", "tdc-formula",
                        "--output", str(report)])
        lines = report.read_text().strip().split("\n")
        assert json.loads(lines[0])["type"] == "config"
        assert json.loads(lines[-1])["violated"] == 2  # both known, flagged

    def test_row_repro_command_recomputes_row(self, runner, tmp_path):
        report = tmp_path / "report.jsonl"
        run_ok(runner, ["verify", "--claims", "tdc-formula", "--output", str(report)])
        row = next(
            json.loads(line)
            for line in report.read_text().strip().split("\n")[1:-1]
            if json.loads(line)["verdict"] == "violated"
        )
        again = run_ok(runner, row["repro"].split())
        recomputed = json.loads(again.strip().split("\n")[0])
        assert recomputed["computed"] == row["computed"]
        assert recomputed["claim"] == row["claim"]

    def test_table_format(self, runner):
        out = run_ok(runner, ["verify", "--claims", "tdc-formula",
                              "--format", "table"])
        assert "violated [flagged]" in out


class TestExplore:
    def test_scan(self, runner):
        out = run_ok(runner, ["explore", "--max-n", "4"])
        lines = out.strip().split("\n")
        summary = json.loads(lines[-1])
        assert summary["counterexamples"] == 0
        assert summary["findings"] == len(lines) - 2


class TestCheckColoring:
    def test_valid(self, runner, tmp_path):
        f = tmp_path / "coloring.txt"
        f.write_text("2\n0 0\n1 1\n2 0\n3 1\n")
        run_ok(runner, ["check-coloring", "cycle:4", str(f)])

    def test_invalid_exits_4(self, runner, tmp_path):
        f = tmp_path / "coloring.txt"
        # proper, but the ends of the path cannot dominate either class
        f.write_text("2\n0 0\n1 1\n2 0\n3 1\n")
        result = runner.invoke(main, ["check-coloring", "path:4", str(f)])
        assert result.exit_code == 4


class TestCheckCommands:
    def test_formula(self, runner):
        out = run_ok(runner, ["check", "formula", "--family", "cycle", "--n", "9"])
        assert json.loads(out)["verdict"] == "holds"

    def test_sandwich(self, runner):
        out = run_ok(runner, ["check", "sandwich", "cycle:6"])
        assert json.loads(out)["verdict"] == "holds"

    def test_ncorona(self, runner):
        out = run_ok(runner, ["check", "ncorona", "complete:4", "cycle:3"])
        rows = [json.loads(line) for line in out.strip().split("\n")]
        assert all(r["verdict"] == "holds" for r in rows)

    def test_gluing_counterexample_is_flagged_so_exit_zero(self, runner):
        out = run_ok(runner, ["check", "gluing", "path:3", "path:3",
                              "--r", "1", "--clique1", "0", "--clique2", "0"])
        row = json.loads(out)
        assert row["verdict"] == "violated" and row["flagged"]

    def test_stability_family(self, runner):
        out = run_ok(runner, ["check", "stability", "--family",
                              "balanced_complete_bipartite", "--n", "3"])
        assert json.loads(out)["computed"] == 3

    def test_complement_sum(self, runner):
        out = run_ok(runner, ["check", "complement-sum", "cycle:5",
                              "--kind", "stability"])
        assert json.loads(out)["computed"] == 2


class TestCrossProcessDeterminism:
    """Byte-identical reports across separate processes (fresh hash seeds)."""

    def _run(self, args, hash_seed):
        return subprocess.run(
            [sys.executable, "-m", "tdchrom.cli", *args],
            capture_output=True, text=True, check=True,
            env={"PYTHONHASHSEED": hash_seed, "PATH": "/usr/bin:/bin"},
        ).stdout

    def test_verify_reports_identical(self):
        args = ["verify", "--claims", "tdc-formula", "--claims",
                "stability-formula", "--seed", "7"]
        assert self._run(args, "0") == self._run(args, "12345")

    def test_explore_reports_identical(self):
        args = ["explore", "--max-n", "4"]
        assert self._run(args, "1") == self._run(args, "999")
