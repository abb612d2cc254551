"""Tests for suite configuration parsing and precedence."""

import logging

import pytest

from harness.config import (
    ConfigError,
    SuiteConfig,
    build_config,
    load_config_file,
    parse_config_text,
)


def test_defaults():
    """Built-in values."""
    cfg = SuiteConfig()
    assert (cfg.modes, cfg.max_degree, cfg.h, cfg.tolerance) == (2, 12, 1.0, 1e-9)
    assert (cfg.seed, cfg.quad_order, cfg.cases, cfg.jobs) == (42, 40, 100, 1)
    assert "jobs" not in cfg.to_dict()
    assert "explicit" not in cfg.to_dict()


@pytest.mark.parametrize("field_name, value", [
    ("modes", 0), ("max_degree", -1), ("h", 0.0), ("tolerance", -1e-3),
    ("seed", -1), ("quad_order", 0), ("cases", 0), ("jobs", 0),
])
def test_invalid_values(field_name, value):
    """Out-of-range values raise :class:`ConfigError`."""
    with pytest.raises(ConfigError):
        SuiteConfig(**{field_name: value})


def test_zero_tolerance_is_allowed():
    """``tol = 0`` is a legal (strict) setting."""
    assert SuiteConfig(tolerance=0.0).tolerance == 0.0


def test_parse_text_aliases_and_comments(caplog):
    """Aliases map to fields; comments and blanks are skipped."""
    text = "# run\nn = 3\n\nhbar=0.5  # small\ndegree=8\ntol=1e-6\nquad=20\n"
    values = parse_config_text(text)
    assert values == {"modes": 3, "h": 0.5, "max_degree": 8, "tolerance": 1e-6, "quad_order": 20}
    assert isinstance(values["modes"], int)
    assert not caplog.records


def test_parse_text_unknown_and_bad(caplog):
    """Unknown keys warn, bad values are logged and the default is kept."""
    with caplog.at_level(logging.WARNING):
        values = parse_config_text("colour=blue\nmodes=two\nseed=7\nnonsense\n", "cfg.txt")
    assert values == {"seed": 7}
    assert "unknown key 'colour'" in caplog.text
    assert "invalid value 'two'" in caplog.text
    assert "cfg.txt:4" in caplog.text


def test_load_config_file(tmp_path, caplog):
    """Reads from disk; a missing file gives ``None``."""
    path = tmp_path / "suite.cfg"
    path.write_text("cases=5\n", encoding="utf-8")
    assert load_config_file(str(path)) == {"cases": 5}
    with caplog.at_level(logging.ERROR):
        assert load_config_file(str(tmp_path / "missing.cfg")) is None
    assert "Failed to read config" in caplog.text


def test_flags_override_file():
    """Flags > file > defaults; ``None`` flags are ignored."""
    cfg = build_config({"cases": 5, "h": 0.5}, {"cases": 7, "seed": None})
    assert cfg.cases == 7
    assert cfg.h == 0.5
    assert cfg.seed == 42
    assert cfg.explicit == frozenset({"cases", "h"})


def test_overrides_skip_explicit_fields():
    """Suite overrides only touch what the user left unset."""
    cfg = build_config(flag_values={"cases": 3})
    moved = cfg.with_overrides({"cases": 1000, "max_degree": 20})
    assert moved.cases == 3
    assert moved.max_degree == 20
    assert SuiteConfig().with_overrides({}) == SuiteConfig()


def test_acceptance_threshold():
    """A suite threshold replaces the default tolerance; an explicit one can only tighten it."""
    assert SuiteConfig().acceptance == 1e-9
    assert "threshold" not in SuiteConfig().to_dict()
    strict = SuiteConfig().with_threshold(1e-12)
    assert strict.acceptance == 1e-12
    assert strict.to_dict()["threshold"] == 1e-12
    assert SuiteConfig().with_threshold(1e-8).acceptance == 1e-8
    loose = build_config(flag_values={"tolerance": 1e-6}).with_threshold(1e-12)
    assert loose.acceptance == 1e-12
    assert build_config(flag_values={"tolerance": 0.0}).with_threshold(1e-8).acceptance == 0.0
    assert SuiteConfig().with_threshold(None) == SuiteConfig()
    with pytest.raises(ConfigError):
        SuiteConfig(threshold=-1.0)
