"""Run suites and assemble reports."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from harness.config import SuiteConfig
from harness.report import AggregateReport, SuiteReport
from harness.suites import SUITES, suite_names

logger = logging.getLogger(__name__)


class UnknownSuiteError(LookupError):
    """Suite name not in the registry."""

    def __init__(self, name: str) -> None:
        super().__init__(f"unknown suite {name!r}; valid names: {', '.join(suite_names())}")
        self.name = name


def run_suite(name: str, config: SuiteConfig) -> SuiteReport:
    """Run one suite; its exceptions end up in ``SuiteReport.error``."""
    if name not in SUITES:
        raise UnknownSuiteError(name)
    suite = SUITES[name]
    cfg = config.with_overrides(suite.overrides).with_threshold(suite.threshold)
    report = SuiteReport(name, cfg.to_dict())
    start = time.perf_counter()
    try:
        report.cases = suite.run(cfg)
    except Exception as e:  # pylint: disable=broad-except
        report.error = f"{type(e).__name__}: {e}"
        logger.error("suite %s failed: %s", name, report.error)
        logger.debug("suite %s traceback", name, exc_info=True)
    report.wall_time = time.perf_counter() - start
    logger.info("suite %s: %s in %.2fs (%d cases, max residual %s)",
                name, "pass" if report.passed else "FAIL", report.wall_time,
                len(report.cases), report.max_residual)
    return report


def run_all(config: SuiteConfig, names: Optional[Sequence[str]] = None) -> AggregateReport:
    """Run ``names`` (default: every suite); report order follows ``names``."""
    selected: List[str] = list(names) if names is not None else suite_names()
    for name in selected:
        if name not in SUITES:
            raise UnknownSuiteError(name)
    if config.jobs > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(lambda n: run_suite(n, config), selected))
    else:
        reports = [run_suite(n, config) for n in selected]
    return AggregateReport(reports)
