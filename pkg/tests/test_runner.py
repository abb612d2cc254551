"""Tests for the suite runner and the registry."""

import pytest

from harness import suites
from harness.config import SuiteConfig, build_config
from harness.runner import UnknownSuiteError, run_all, run_suite
from harness.suites import Suite, case_rng, manifest_lines, suite_names

EXPECTED_SUITES = [
    "coherent-product",
    "norm-bound",
    "bargmann-factorization",
    "reproducing-kernel",
    "hermite-identity",
    "stochastic-extension",
    "husimi",
    "identification-tj",
    "mizrahi",
    "displacement-covariance",
    "weyl-compose",
    "lemma-bridge",
    "remainder-bound",
]

QUICK = build_config(flag_values={"cases": 2})


def test_registry_order_and_manifest():
    """Thirteen suites, each with a statement."""
    assert suite_names() == EXPECTED_SUITES
    lines = manifest_lines()
    assert len(lines) == len(EXPECTED_SUITES)
    assert all(": " in line for line in lines)


def test_case_rng_is_order_independent():
    """Same ``(seed, suite, index)``, same stream."""
    a = case_rng(42, "mizrahi", 3).normal(size=4)
    b = case_rng(42, "mizrahi", 3).normal(size=4)
    c = case_rng(42, "husimi", 3).normal(size=4)
    assert (a == b).all()
    assert not (a == c).all()


def test_unknown_suite():
    """Unknown names list the valid ones."""
    with pytest.raises(UnknownSuiteError, match="valid names: coherent-product"):
        run_suite("nope", SuiteConfig())
    with pytest.raises(UnknownSuiteError):
        run_all(SuiteConfig(), ["hermite-identity", "nope"])


def test_hermite_identity_passes():
    """Exact suite passes with the default tolerance."""
    report = run_suite("hermite-identity", SuiteConfig())
    assert report.passed
    assert len(report.cases) == 13
    assert report.wall_time >= 0.0


def test_overrides_are_echoed():
    """Per-suite overrides land in the config echo unless set by the user."""
    report = run_suite("lemma-bridge", QUICK)
    assert report.config["cases"] == 2
    report = run_suite("coherent-product", QUICK)
    assert report.config["max_degree"] == 16


def test_digests_are_reproducible():
    """Two runs with the same seed agree case by case; another seed does not."""
    first = run_suite("coherent-product", QUICK)
    second = run_suite("coherent-product", QUICK)
    other = run_suite("coherent-product", build_config(flag_values={"cases": 2, "seed": 7}))
    assert [c.digest for c in first.cases] == [c.digest for c in second.cases]
    assert [c.digest for c in first.cases] != [c.digest for c in other.cases]


def test_zero_tolerance_fails_truncated_checks():
    """Truncation residuals are nonzero, so ``tol = 0`` fails."""
    cfg = build_config(flag_values={"cases": 2, "max_degree": 6, "tolerance": 0.0})
    report = run_suite("coherent-product", cfg)
    assert report.error is None
    assert not report.passed


def test_parallel_run_matches_serial():
    """``jobs`` changes neither order nor content."""
    names = ["hermite-identity", "lemma-bridge", "remainder-bound"]
    serial = run_all(QUICK, names)
    parallel = run_all(build_config(flag_values={"cases": 2, "jobs": 3}), names)
    assert [s.suite for s in parallel.suites] == names
    assert serial.to_json() == parallel.to_json()


def test_suite_exception_is_reported(monkeypatch):
    """An exception inside a suite becomes ``error`` and a failure."""

    def boom(cfg):
        raise ValueError(f"bad degree {cfg.max_degree}")

    monkeypatch.setitem(suites.SUITES, "boom", Suite("boom", "always raises", boom))
    report = run_suite("boom", SuiteConfig())
    assert report.error == "ValueError: bad degree 12"
    assert not report.passed
    assert run_all(SuiteConfig(), ["boom"]).exit_code == 1


@pytest.mark.parametrize("name", EXPECTED_SUITES)
def test_every_suite_runs(name):
    """Smoke run with two cases: no exception, at least one record."""
    report = run_suite(name, QUICK)
    assert report.error is None
    assert report.cases


SUITE_THRESHOLDS = {
    "reproducing-kernel": 1e-8,
    "hermite-identity": 1e-12,
    "identification-tj": 1e-10,
    "weyl-compose": 1e-12,
    "lemma-bridge": 1e-10,
}


@pytest.mark.parametrize("name", EXPECTED_SUITES)
def test_suite_thresholds(name):
    """Suites with their own acceptance threshold echo it; the others judge on ``tol``."""
    assert suites.SUITES[name].threshold == SUITE_THRESHOLDS.get(name)
    echoed = run_suite(name, QUICK).config
    if name in SUITE_THRESHOLDS:
        assert echoed["threshold"] == SUITE_THRESHOLDS[name]
    else:
        assert "threshold" not in echoed


def test_threshold_decides_the_verdict(monkeypatch):
    """A residual between the suite threshold and ``tol`` fails."""

    def borderline(cfg):
        return [suites._record(0, {"r": 1e-11}, 1e-11, cfg.acceptance)]  # pylint: disable=protected-access

    monkeypatch.setitem(suites.SUITES, "borderline",
                        Suite("borderline", "residual 1e-11", borderline, threshold=1e-12))
    assert not run_suite("borderline", SuiteConfig()).passed
    monkeypatch.setitem(suites.SUITES, "borderline",
                        Suite("borderline", "residual 1e-11", borderline))
    assert run_suite("borderline", SuiteConfig()).passed
