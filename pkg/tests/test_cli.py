"""Tests for the ``verify`` command line."""

import json

import verify
from harness.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main


def test_list_and_manifest(capsys):
    """Listing commands print and succeed."""
    assert main(["--list"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "mizrahi" in out.splitlines()
    assert main(["--manifest"]) == EXIT_PASS
    assert "hermite-identity: " in capsys.readouterr().out


def test_usage_errors(tmp_path):
    """Missing suite, unknown suite, bad flag, bad value and bad config file."""
    assert main([]) == EXIT_USAGE
    assert main(["nope"]) == EXIT_USAGE
    assert main(["hermite-identity", "--bogus"]) == EXIT_USAGE
    assert main(["hermite-identity", "--modes", "0"]) == EXIT_USAGE
    assert main(["hermite-identity", "--config", str(tmp_path / "missing.cfg")]) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    """``--help`` is not an error."""
    assert main(["--help"]) == EXIT_PASS
    assert "verify" in capsys.readouterr().out


def test_pass_with_report(tmp_path, capsys):
    """Report is written without timings unless asked."""
    path = tmp_path / "report.json"
    assert main(["hermite-identity", "--report", str(path)]) == EXIT_PASS
    assert "ALL PASSED" in capsys.readouterr().out
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "hermite-identity"
    assert "wall_time" not in data["suites"][0]
    assert main(["hermite-identity", "--report", str(path), "--timings"]) == EXIT_PASS
    data = json.loads(path.read_text(encoding="utf-8"))
    assert "wall_time" in data["suites"][0]


def test_failure_exit_code(capsys):
    """A failing check gives exit code 1."""
    args = ["coherent-product", "--tol", "0", "--cases", "2", "--degree", "6"]
    assert main(args) == EXIT_FAIL
    assert "FAILED" in capsys.readouterr().out


def test_config_file_and_flag_precedence(tmp_path):
    """Flag values beat the file; the file beats the defaults."""
    cfg = tmp_path / "suite.cfg"
    cfg.write_text("cases=3\nseed=9\ntol=1e-6\n", encoding="utf-8")
    path = tmp_path / "report.json"
    args = ["lemma-bridge", "--config", str(cfg), "--cases", "2", "--report", str(path)]
    assert main(args) == EXIT_PASS
    config = json.loads(path.read_text(encoding="utf-8"))["suites"][0]["config"]
    assert config["cases"] == 2
    assert config["seed"] == 9
    assert config["tolerance"] == 1e-6
    assert config["threshold"] == 1e-10


def test_root_script_entry_point(capsys):
    """``verify.py`` drops the program name."""
    assert verify.main(["verify.py", "--list"]) == EXIT_PASS
    assert "husimi" in capsys.readouterr().out
