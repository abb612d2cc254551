"""Suite and aggregate reports, with their JSON form."""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from core.validation import validate_report

logger = logging.getLogger(__name__)

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["passed", "suites"],
    "properties": {
        "passed": {"type": "boolean"},
        "suites": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "passed", "config", "cases", "error", "max_residual"],
                "properties": {
                    "suite": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "config": {"type": "object"},
                    "error": {"type": ["string", "null"]},
                    "max_residual": {"type": ["number", "null"]},
                    "wall_time": {"type": "number"},
                    "cases": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["index", "digest", "residual", "bound", "passed"],
                            "properties": {
                                "index": {"type": "integer"},
                                "label": {"type": "string"},
                                "digest": {"type": "string"},
                                "residual": {"type": ["number", "null"]},
                                "bound": {"type": ["number", "null"]},
                                "passed": {"type": "boolean"},
                            },
                        },
                    },
                },
            },
        },
    },
}


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot digest {type(value).__name__}")


def digest(payload: Any) -> str:
    """First 16 hex digits of the sha256 of the canonical JSON of ``payload``."""
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=_plain)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def finite_or_none(value: Optional[float]) -> Optional[float]:
    """JSON-safe real: non-finite values become ``None``."""
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class CaseRecord:
    """One checked case of a suite."""

    index: int
    digest: str
    residual: Optional[float]
    passed: bool
    bound: Optional[float] = None
    label: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """JSON form; ``label`` only when set."""
        data: Dict[str, Any] = {
            "index": self.index,
            "digest": self.digest,
            "residual": finite_or_none(self.residual),
            "bound": finite_or_none(self.bound),
            "passed": self.passed,
        }
        if self.label:
            data["label"] = self.label
        return data


@dataclass
class SuiteReport:
    """Outcome of one suite."""

    suite: str
    config: Dict[str, Any]
    cases: List[CaseRecord] = field(default_factory=list)
    error: Optional[str] = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        """No error, at least one case, and every case passed."""
        return self.error is None and bool(self.cases) and all(c.passed for c in self.cases)

    @property
    def max_residual(self) -> Optional[float]:
        """Largest finite residual, ``None`` if there is none."""
        finite = [finite_or_none(c.residual) for c in self.cases]
        return max((r for r in finite if r is not None), default=None)

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """JSON form; ``wall_time`` only with ``timings``."""
        data: Dict[str, Any] = {
            "suite": self.suite,
            "passed": self.passed,
            "config": dict(self.config),
            "error": self.error,
            "max_residual": self.max_residual,
            "cases": [c.to_dict() for c in sorted(self.cases, key=lambda c: c.index)],
        }
        if timings:
            data["wall_time"] = round(self.wall_time, 6)
        return data


@dataclass
class AggregateReport:
    """Reports of several suites, in registry order."""

    suites: List[SuiteReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True iff every suite passed."""
        return all(s.passed for s in self.suites)

    @property
    def exit_code(self) -> int:
        """``0`` when everything passed, ``1`` otherwise."""
        return 0 if self.passed else 1

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        """JSON form."""
        return {"passed": self.passed, "suites": [s.to_dict(timings) for s in self.suites]}

    def to_json(self, timings: bool = False) -> str:
        """Canonical text: sorted keys, two-space indent, trailing newline."""
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2) + "\n"

    def export_json(self, file_path: str, timings: bool = False) -> bool:
        """Write :meth:`to_json` as UTF-8; ``False`` on IO failure."""
        data = self.to_dict(timings)
        if not validate_report(data):
            logger.error("Report does not match the published schema; not written")
            return False
        try:
            with open(file_path, "w", encoding="utf-8") as f:
                f.write(self.to_json(timings))
        except IOError as e:
            logger.error("Failed to write report to %s: %s", file_path, e)
            return False
        return True

    def summary_lines(self) -> List[str]:
        """One line per suite for the terminal."""
        lines = []
        for s in self.suites:
            status = "PASS" if s.passed else "FAIL"
            residual = "n/a" if s.max_residual is None else f"{s.max_residual:.3e}"
            extra = f"  error: {s.error}" if s.error else ""
            lines.append(f"{status}  {s.suite:<24} cases={len(s.cases):<5} max_residual={residual}{extra}")
        lines.append("ALL PASSED" if self.passed else "FAILED")
        return lines
