"""Tests for suite reports and their JSON form."""

import json
import math

import numpy as np

from core.validation import validate_report
from harness.report import AggregateReport, CaseRecord, SuiteReport, digest, finite_or_none


def _report(passed=True, error=None):
    cases = [
        CaseRecord(1, digest({"k": 1}), 2e-12, passed, label="second"),
        CaseRecord(0, digest({"k": 0}), 1e-12, True, bound=math.inf),
    ]
    return SuiteReport("mizrahi", {"modes": 2, "h": 1.0}, cases, error, wall_time=0.25)


def test_digest_is_canonical():
    """Key order does not matter; numpy and complex values are accepted."""
    a = digest({"x": np.array([1.0, 2.0]), "c": 1 + 2j, "s": {3, 1}})
    b = digest({"s": {1, 3}, "c": complex(1, 2), "x": [1.0, 2.0]})
    assert a == b
    assert len(a) == 16
    assert digest({"x": 1}) != digest({"x": 2})


def test_finite_or_none():
    """Non-finite reals become ``None``."""
    assert finite_or_none(math.inf) is None
    assert finite_or_none(math.nan) is None
    assert finite_or_none(None) is None
    assert finite_or_none(np.float64(0.5)) == 0.5


def test_case_record_dict():
    """``label`` appears only when set; infinite bounds are ``None``."""
    first, second = _report().cases
    assert first.to_dict()["label"] == "second"
    assert "label" not in second.to_dict()
    assert second.to_dict()["bound"] is None


def test_suite_verdict():
    """Empty, failing or erroring suites do not pass."""
    assert _report().passed
    assert not _report(passed=False).passed
    assert not _report(error="ValueError: x").passed
    assert not SuiteReport("husimi", {}).passed
    assert _report().max_residual == 2e-12
    assert SuiteReport("husimi", {}).max_residual is None


def test_suite_dict_sorted_and_timings():
    """Cases sorted by index; ``wall_time`` only on request."""
    data = _report().to_dict()
    assert [c["index"] for c in data["cases"]] == [0, 1]
    assert "wall_time" not in data
    assert _report().to_dict(timings=True)["wall_time"] == 0.25


def test_aggregate_json(tmp_path):
    """Canonical text, schema-valid, exit code from the verdict."""
    report = AggregateReport([_report(), _report(passed=False)])
    assert report.exit_code == 1
    assert AggregateReport([_report()]).exit_code == 0
    text = report.to_json()
    assert text.endswith("}\n")
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert validate_report(data)
    path = tmp_path / "report.json"
    assert report.export_json(str(path))
    assert path.read_text(encoding="utf-8") == text


def test_export_to_bad_path(tmp_path, caplog):
    """IO failure returns ``False``."""
    report = AggregateReport([_report()])
    assert not report.export_json(str(tmp_path / "missing" / "report.json"))
    assert "Failed to write report" in caplog.text


def test_summary_lines():
    """One line per suite and a final verdict."""
    lines = AggregateReport([_report(), _report(error="boom")]).summary_lines()
    assert lines[0].startswith("PASS  mizrahi")
    assert "error: boom" in lines[1]
    assert lines[-1] == "FAILED"
