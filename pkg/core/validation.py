"""Validation helpers for JSON payloads (vectors, symbols, matrices, reports).

Every helper logs the first problem it finds and returns ``False``; none of
them raise.
"""
from __future__ import annotations

import logging
from numbers import Real
from typing import Any


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_real(value: Any) -> bool:
    return isinstance(value, Real) and not isinstance(value, bool)


def _validate_header(data: Any, where: str) -> bool:
    if not isinstance(data, dict):
        logging.error("%s: expected dict, got %s", where, type(data).__name__)
        return False
    modes = data.get("modes")
    if not _is_int(modes) or modes < 1:
        logging.error("%s: 'modes' must be a positive int, got %r", where, modes)
        return False
    return True


def validate_fock_payload(data: Any) -> bool:
    """Check ``{modes, max_degree, entries: [[alpha, re, im], ...]}``."""
    if not _validate_header(data, "fock"):
        return False
    max_degree = data.get("max_degree")
    if not _is_int(max_degree) or max_degree < 0:
        logging.error("fock: 'max_degree' must be a non-negative int, got %r", max_degree)
        return False
    entries = data.get("entries")
    if not isinstance(entries, list):
        logging.error("fock: 'entries' must be a list, got %s", type(entries).__name__)
        return False
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 3:
            logging.error("fock: invalid entry %r", entry)
            return False
        alpha, re, im = entry
        if (
            not isinstance(alpha, list)
            or len(alpha) != data["modes"]
            or not all(_is_int(a) and a >= 0 for a in alpha)
        ):
            logging.error("fock: invalid multi-index %r", alpha)
            return False
        if sum(alpha) > max_degree:
            logging.error("fock: multi-index %r exceeds max_degree %d", alpha, max_degree)
            return False
        if not (_is_real(re) and _is_real(im)):
            logging.error("fock: coefficient of %r must be two reals", alpha)
            return False
    return True


def validate_symbol_payload(data: Any) -> bool:
    """Check ``{modes, terms: [{freq: [...], poly: [[exponents, re, im], ...]}, ...]}``."""
    if not _validate_header(data, "symbol"):
        return False
    nvars = 2 * data["modes"]
    terms = data.get("terms")
    if not isinstance(terms, list):
        logging.error("symbol: 'terms' must be a list, got %s", type(terms).__name__)
        return False
    for term in terms:
        if not isinstance(term, dict):
            logging.error("symbol: each term must be dict, got %r", term)
            return False
        freq = term.get("freq")
        if not isinstance(freq, list) or len(freq) != nvars or not all(_is_real(a) for a in freq):
            logging.error("symbol: 'freq' must be %d reals, got %r", nvars, freq)
            return False
        poly = term.get("poly")
        if not isinstance(poly, list):
            logging.error("symbol: 'poly' must be a list, got %r", poly)
            return False
        for mono in poly:
            if (
                not isinstance(mono, list)
                or len(mono) != 3
                or not isinstance(mono[0], list)
                or len(mono[0]) != nvars
                or not all(_is_int(e) and e >= 0 for e in mono[0])
                or not (_is_real(mono[1]) and _is_real(mono[2]))
            ):
                logging.error("symbol: invalid monomial %r", mono)
                return False
    return True


def validate_matrix_payload(data: Any) -> bool:
    """Check a row-major complex-pair operator payload."""
    if not _validate_header(data, "matrix"):
        return False
    entries = data.get("entries")
    if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
        logging.error("matrix: 'entries' must be a list of rows")
        return False
    size = len(entries)
    for row in entries:
        if len(row) != size:
            logging.error("matrix: rows must have length %d", size)
            return False
    return True


def validate_report(data: Any) -> bool:
    """Check an aggregate report (``{passed, suites: [...]}``) against the published schema."""
    if not isinstance(data, dict):
        logging.error("report: expected dict, got %s", type(data).__name__)
        return False
    if not isinstance(data.get("passed"), bool):
        logging.error("report: 'passed' must be bool")
        return False
    suites = data.get("suites")
    if not isinstance(suites, list):
        logging.error("report: 'suites' must be a list")
        return False
    for suite in suites:
        if not validate_suite_report(suite):
            return False
    return True


def validate_suite_report(data: Any) -> bool:
    """Check one suite report."""
    if not isinstance(data, dict):
        logging.error("suite: expected dict, got %s", type(data).__name__)
        return False
    for key, kind in (("suite", str), ("passed", bool), ("config", dict), ("cases", list)):
        if not isinstance(data.get(key), kind):
            logging.error("suite: %r must be %s", key, kind.__name__)
            return False
    if data.get("error") is not None and not isinstance(data["error"], str):
        logging.error("suite: 'error' must be str or null")
        return False
    max_residual = data.get("max_residual")
    if max_residual is not None and not _is_real(max_residual):
        logging.error("suite: 'max_residual' must be a real or null")
        return False
    for case in data["cases"]:
        if not isinstance(case, dict):
            logging.error("suite: each case must be dict, got %r", case)
            return False
        if not _is_int(case.get("index")) or not isinstance(case.get("digest"), str):
            logging.error("suite: case needs int 'index' and str 'digest', got %r", case)
            return False
        residual = case.get("residual")
        if (residual is not None and not _is_real(residual)) or not isinstance(
            case.get("passed"), bool
        ):
            logging.error("suite: case needs real 'residual' and bool 'passed', got %r", case)
            return False
        bound = case.get("bound")
        if bound is not None and not _is_real(bound):
            logging.error("suite: case 'bound' must be a real or null, got %r", bound)
            return False
    return True
