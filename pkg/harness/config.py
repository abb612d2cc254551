"""Suite configuration: built-in defaults, ``key=value`` files and CLI flags."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Any, Dict, FrozenSet, Mapping, Optional

logger = logging.getLogger(__name__)

# clé du fichier -> champ de SuiteConfig
FILE_KEYS: Dict[str, str] = {
    "modes": "modes",
    "n": "modes",
    "degree": "max_degree",
    "max_degree": "max_degree",
    "hbar": "h",
    "h": "h",
    "tol": "tolerance",
    "tolerance": "tolerance",
    "seed": "seed",
    "quad": "quad_order",
    "quad_order": "quad_order",
    "cases": "cases",
    "jobs": "jobs",
}


class ConfigError(ValueError):
    """Invalid configuration value."""


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters shared by every verification suite.

    ``explicit`` records which fields the user set; per-suite overrides only
    touch the others.
    """

    modes: int = 2
    max_degree: int = 12
    h: float = 1.0
    tolerance: float = 1e-9
    seed: int = 42
    quad_order: int = 40
    cases: int = 100
    jobs: int = 1
    threshold: Optional[float] = None
    explicit: FrozenSet[str] = field(default_factory=frozenset, compare=False)

    def __post_init__(self) -> None:
        for name in ("modes", "quad_order", "cases", "jobs"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.max_degree < 0:
            raise ConfigError(f"max_degree must be >= 0, got {self.max_degree}")
        if not self.h > 0:
            raise ConfigError(f"h must be > 0, got {self.h}")
        if self.tolerance < 0:
            raise ConfigError(f"tolerance must be >= 0, got {self.tolerance}")
        if self.seed < 0:
            raise ConfigError(f"seed must be >= 0, got {self.seed}")
        if self.threshold is not None and self.threshold < 0:
            raise ConfigError(f"threshold must be >= 0, got {self.threshold}")

    def with_overrides(self, overrides: Mapping[str, Any]) -> "SuiteConfig":
        """Apply suite-specific values to the fields the user did not set."""
        kept = {k: v for k, v in overrides.items() if k not in self.explicit}
        return replace(self, **kept) if kept else self

    def with_threshold(self, threshold: Optional[float]) -> "SuiteConfig":
        """Attach a suite's own acceptance threshold."""
        return self if threshold is None else replace(self, threshold=threshold)

    @property
    def acceptance(self) -> float:
        """Pass/fail limit of a case.

        The suite threshold when there is one, tightened by a tolerance the
        user set; otherwise the tolerance.
        """
        if self.threshold is None:
            return self.tolerance
        if "tolerance" in self.explicit:
            return min(self.threshold, self.tolerance)
        return self.threshold

    def to_dict(self) -> Dict[str, Any]:
        """Config echo for reports (``jobs`` excluded, it must not change output)."""
        data = asdict(self)
        data.pop("explicit")
        data.pop("jobs")
        if data["threshold"] is None:
            data.pop("threshold")
        return data


_TYPES = {f.name: f.type for f in fields(SuiteConfig)}


def _coerce(name: str, raw: str) -> Any:
    kind = _TYPES[name]
    if kind in ("int", int):
        return int(raw)
    return float(raw)


def parse_config_text(text: str, source: str = "<string>") -> Dict[str, Any]:
    """Parse ``key=value`` lines; unknown keys and bad values are logged and skipped."""
    values: Dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            logger.error("%s:%d: expected key=value, got %r", source, lineno, line)
            continue
        key, raw = (part.strip() for part in line.split("=", 1))
        name = FILE_KEYS.get(key.lower())
        if name is None:
            logger.warning("%s:%d: unknown key %r ignored", source, lineno, key)
            continue
        try:
            values[name] = _coerce(name, raw)
        except ValueError:
            logger.error("%s:%d: invalid value %r for %s, default kept", source, lineno, raw, key)
    return values


def load_config_file(file_path: str) -> Optional[Dict[str, Any]]:
    """Read a config file; ``None`` when it cannot be read."""
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            text = f.read()
    except IOError as e:
        logger.error("Failed to read config from %s: %s", file_path, e)
        return None
    return parse_config_text(text, file_path)


def build_config(file_values: Optional[Mapping[str, Any]] = None,
                 flag_values: Optional[Mapping[str, Any]] = None) -> SuiteConfig:
    """Flags > file > defaults. Both sources count as explicit."""
    merged: Dict[str, Any] = {}
    merged.update(file_values or {})
    merged.update({k: v for k, v in (flag_values or {}).items() if v is not None})
    return SuiteConfig(**merged, explicit=frozenset(merged))
