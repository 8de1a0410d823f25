"""End-to-end tests of the wm-verify command line."""

import json

import pytest

from config.config import REPORT_SCHEMA_VERSION
from verifier_cli.cli import EXIT_LIMIT, EXIT_PASS, EXIT_USAGE, EXIT_VIOLATION, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestBall:
    def test_lattice_hexagon(self, capsys):
        code, out = run(
            capsys, "ball", "--model", "lattice", "--n", "2", "--radius", "1", "--quiet"
        )
        assert code == EXIT_PASS
        payload = json.loads(out)
        assert payload["base"] == "0,0,0"
        assert len(payload["vertices"]) == 7

    def test_building_radius_one(self, capsys):
        code, out = run(
            capsys, "ball", "--model", "building", "--p", "2", "--radius", "1", "--quiet"
        )
        assert code == EXIT_PASS
        payload = json.loads(out)
        assert len(payload["vertices"]) == 66
        assert payload["base"] == "2|1,0,0,0;1,0,0;1,0;1"

    def test_radius_zero(self, capsys):
        code, out = run(capsys, "ball", "--radius", "0", "--quiet")
        payload = json.loads(out)
        assert code == EXIT_PASS
        assert len(payload["vertices"]) == 1
        assert payload["edges"] == []

    def test_dot_to_file(self, capsys, tmp_path):
        target = tmp_path / "ball.dot"
        code, out = run(
            capsys, "ball", "--n", "2", "--radius", "1", "--format", "dot",
            "--output", str(target), "--quiet",
        )
        assert code == EXIT_PASS
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("graph ball {")

    def test_vertex_ceiling(self, capsys):
        code, _ = run(capsys, "ball", "--n", "2", "--radius", "3", "--max-vertices", "5", "--quiet")
        assert code == EXIT_LIMIT


class TestVerify:
    def test_lattice_weak_modularity(self, capsys):
        code, _ = run(
            capsys, "verify", "--model", "lattice", "--n", "3", "--radius", "3",
            "--checks", "triangle,quadrangle", "--quiet",
        )
        assert code == EXIT_PASS

    def test_edge_forms_rank_five(self, capsys):
        code, out = run(
            capsys, "verify", "--model", "lattice", "--n", "5", "--checks", "edge-forms",
            "--quiet", "--json",
        )
        assert code == EXIT_PASS
        report = json.loads(out)
        assert report["suites"][0]["name"] == "edge-forms"
        assert report["suites"][0]["passed"] is True

    @pytest.mark.parametrize(
        "checks", ["height-formula", "completions", "square-lemma", "local-wm"]
    )
    def test_rank_three_suites(self, capsys, checks):
        code, _ = run(capsys, "verify", "--n", "3", "--radius", "3", "--checks", checks, "--quiet")
        assert code == EXIT_PASS

    def test_all_centers(self, capsys):
        code, _ = run(capsys, "verify", "--n", "2", "--radius", "3", "--all-centers", "--quiet")
        assert code == EXIT_PASS

    def test_building_edge_forms(self, capsys):
        code, _ = run(
            capsys, "verify", "--model", "building", "--radius", "1",
            "--checks", "edge-forms,height-formula,apartment-embed", "--quiet",
        )
        assert code == EXIT_PASS

    @pytest.mark.slow
    def test_building_local_weak_modularity(self, capsys):
        code, _ = run(
            capsys, "verify", "--model", "building", "--p", "2", "--radius", "3",
            "--checks", "local-wm,square-lemma", "--quiet",
        )
        assert code == EXIT_PASS

    def test_five_cycle_is_a_violation(self, capsys):
        code, out = run(
            capsys, "verify", "--model", "synthetic", "--graph", "c5", "--radius", "3",
            "--checks", "triangle", "--quiet", "--json",
        )
        assert code == EXIT_VIOLATION
        report = json.loads(out)
        assert report["passed"] is False
        assert report["suites"][0]["reports"][0]["violations"] == [["0", "2", "3"]]

    def test_six_cycle_is_a_violation(self, capsys):
        code, _ = run(
            capsys, "verify", "--model", "synthetic", "--graph", "c6", "--radius", "3",
            "--checks", "quadrangle", "--quiet",
        )
        assert code == EXIT_VIOLATION

    def test_cube_passes(self, capsys):
        code, _ = run(capsys, "verify", "--model", "synthetic", "--graph", "cube", "--quiet")
        assert code == EXIT_PASS

    def test_output_is_deterministic(self, capsys):
        argv = ["verify", "--n", "2", "--radius", "3", "--quiet", "--json"]
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second
        assert json.loads(first)["schema_version"] == REPORT_SCHEMA_VERSION


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--radius", "2", "--checks", "triangle"],
            ["verify", "--checks", "bogus"],
            ["verify", "--model", "building", "--p", "4"],
            ["verify", "--model", "synthetic"],
            ["verify", "--model", "building", "--building-dim", "5"],
            ["verify", "--n", "4", "--checks", "square-lemma"],
            ["verify", "--model", "building", "--checks", "completions"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        code, _ = run(capsys, *argv, "--quiet")
        assert code == EXIT_USAGE

    def test_schema(self, capsys):
        code, out = run(capsys, "schema")
        assert code == EXIT_PASS
        schemas = json.loads(out)
        assert {"RunConfig", "BallExport", "ConditionReport", "VerificationReport"} <= set(schemas)
