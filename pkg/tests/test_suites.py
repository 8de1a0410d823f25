"""Tests for the named verification suites run through run_suites."""

import pytest

import verifier_cli.suites as suites
from verifier_cli import RunConfig, run_suites

# Admissible completion instances in the radius-3 ball
COMPLETION_INSTANCES = {4: 8340, 5: 106380}


class TestCompletions:
    @pytest.mark.parametrize("n", [2, 3])
    def test_low_rank(self, n):
        _, (result,) = run_suites(
            RunConfig(model="lattice", n=n, radius=3, checks=["completions"], quiet=True)
        )
        assert result.passed
        assert result.instances_checked > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [4, 5])
    def test_higher_rank(self, n):
        _, (result,) = run_suites(
            RunConfig(model="lattice", n=n, radius=3, checks=["completions"], quiet=True)
        )
        assert result.mismatches == []
        assert result.instances_checked == COMPLETION_INSTANCES[n]


class TestCenterSweep:
    def test_shared_between_condition_suites(self, monkeypatch):
        calls = []
        sweep = suites.check_all_centers

        def counting(*args, **kwargs):
            calls.append(kwargs)
            return sweep(*args, **kwargs)

        monkeypatch.setattr(suites, "check_all_centers", counting)
        config = RunConfig(
            n=2,
            radius=3,
            checks=["triangle", "quadrangle"],
            all_centers=True,
            fail_fast=True,
            max_vertices=1000,
            quiet=True,
        )
        _, (triangle, quadrangle) = run_suites(config)

        assert len(calls) == 1
        assert calls[0]["fail_fast"] is True
        assert calls[0]["max_vertices"] == 1000
        # base report plus one per vertex of the radius-1 ball
        assert len(triangle.reports) == len(quadrangle.reports) == 1 + 7
        assert {r.condition for r in triangle.reports} == {"triangle"}
        assert {r.condition for r in quadrangle.reports} == {"quadrangle"}
        assert triangle.passed and quadrangle.passed

    def test_local_sweep_is_separate(self, monkeypatch):
        calls = []
        sweep = suites.check_all_centers

        def counting(*args, **kwargs):
            calls.append(args)
            return sweep(*args, **kwargs)

        monkeypatch.setattr(suites, "check_all_centers", counting)
        config = RunConfig(
            n=2, radius=3, checks=["triangle", "local-wm"], all_centers=True, quiet=True
        )
        _, (triangle, local) = run_suites(config)
        assert [args[3] for args in calls] == [False, True]
        assert len(local.reports) == 2 + 2 * 7
        assert all(r.local_only for r in local.reports)
