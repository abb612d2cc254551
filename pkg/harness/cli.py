"""Command-line interface: ``verify <suite>|all [options]``."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from harness.config import ConfigError, build_config, load_config_file
from harness.runner import UnknownSuiteError, run_all
from harness.suites import manifest_lines, suite_names

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# option -> champ de SuiteConfig
FLAG_FIELDS = {
    "modes": "modes",
    "degree": "max_degree",
    "hbar": "h",
    "tol": "tolerance",
    "seed": "seed",
    "quad": "quad_order",
    "cases": "cases",
    "jobs": "jobs",
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the harness."""
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run numerical verification suites for the truncated Fock-space calculus.",
    )
    parser.add_argument("suite", nargs="?", help="suite name, or 'all'")
    parser.add_argument("--modes", type=int, help="number of modes n (default 2)")
    parser.add_argument("--degree", type=int, help="truncation degree N (default 12)")
    parser.add_argument("--hbar", type=float, help="semiclassical parameter h (default 1)")
    parser.add_argument("--tol", type=float, help="pass tolerance (default 1e-9)")
    parser.add_argument("--seed", type=int, help="random seed (default 42)")
    parser.add_argument("--quad", type=int, help="Gauss-Hermite order (default 40)")
    parser.add_argument("--cases", type=int, help="random cases per suite (default 100)")
    parser.add_argument("--jobs", type=int, help="suites run in parallel (default 1)")
    parser.add_argument("--config", metavar="PATH", help="key=value config file")
    parser.add_argument("--report", metavar="PATH", help="write the JSON report here")
    parser.add_argument("--timings", action="store_true", help="include wall times in the report")
    parser.add_argument("--manifest", action="store_true", help="print what each suite checks")
    parser.add_argument("--list", action="store_true", help="print suite names")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="diagnostics on stderr (default WARNING)",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` (without the program name), run, return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.list:
        print("\n".join(suite_names()))
        return EXIT_PASS
    if args.manifest:
        print("\n".join(manifest_lines()))
        return EXIT_PASS
    if args.suite is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    file_values = None
    if args.config:
        file_values = load_config_file(args.config)
        if file_values is None:
            return EXIT_USAGE
    flags = {name: getattr(args, flag) for flag, name in FLAG_FIELDS.items()}
    try:
        config = build_config(file_values, flags)
    except ConfigError as e:
        logger.error("invalid configuration: %s", e)
        return EXIT_USAGE

    names = suite_names() if args.suite == "all" else [args.suite]
    try:
        report = run_all(config, names)
    except UnknownSuiteError as e:
        logger.error("%s", e)
        return EXIT_USAGE

    print("\n".join(report.summary_lines()))
    if args.report and not report.export_json(args.report, timings=args.timings):
        return EXIT_USAGE
    return report.exit_code
