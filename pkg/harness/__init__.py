"""Verification harness: configuration, suites, reports and the CLI."""

from .config import SuiteConfig
from .report import AggregateReport, CaseRecord, SuiteReport
from .runner import UnknownSuiteError, run_all, run_suite

__all__ = [
    "SuiteConfig",
    "AggregateReport",
    "CaseRecord",
    "SuiteReport",
    "UnknownSuiteError",
    "run_all",
    "run_suite",
]
