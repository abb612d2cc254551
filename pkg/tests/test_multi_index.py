"""Tests for multi-index combinatorics and basis enumeration."""

import math

import pytest
from hypothesis import given, settings

from conftest import multi_indices
from core.multi_index import (
    TruncationSpec,
    basis_index,
    compositions,
    enumerate_basis,
    factorial_multi,
    log_merge_weight,
    merge_weight,
    raising_weight,
)


def test_truncation_spec_validation():
    """Modes must be positive and the degree non-negative."""
    with pytest.raises(ValueError):
        TruncationSpec(0, 3)
    with pytest.raises(ValueError):
        TruncationSpec(2, -1)
    assert TruncationSpec(3, 4).basis_size == math.comb(7, 3)


def test_enumerate_basis_order():
    """Graded order, first entry decreasing inside a degree."""
    assert enumerate_basis(TruncationSpec(2, 1)) == [(0, 0), (1, 0), (0, 1)]
    assert enumerate_basis(TruncationSpec(1, 3)) == [(0,), (1,), (2,), (3,)]
    basis = enumerate_basis(TruncationSpec(3, 4))
    assert len(basis) == TruncationSpec(3, 4).basis_size
    assert len(set(basis)) == len(basis)
    assert [sum(a) for a in basis] == sorted(sum(a) for a in basis)


def test_basis_index_matches_enumeration():
    """Index map is the inverse of the enumeration."""
    spec = TruncationSpec(2, 5)
    index = basis_index(spec)
    for pos, alpha in enumerate(enumerate_basis(spec)):
        assert index[alpha] == pos


def test_compositions_cover_degree():
    """Every composition of 4 into 3 parts appears once."""
    items = list(compositions(4, 3))
    assert len(items) == math.comb(6, 2)
    assert items[0] == (4, 0, 0)
    assert all(sum(c) == 4 for c in items)


def test_merge_weight_small_values():
    """Closed values for small indices."""
    assert merge_weight((0,), (0,)) == 1.0
    assert merge_weight((1,), (1,)) == pytest.approx(math.sqrt(2.0))
    assert merge_weight((2, 1), (1, 0)) == pytest.approx(math.sqrt(3.0))
    assert factorial_multi((3, 2)) == 12


def test_merge_weight_mode_mismatch():
    """Different mode counts are rejected."""
    with pytest.raises(ValueError):
        merge_weight((1,), (1, 0))


@settings(max_examples=200, deadline=None)
@given(multi_indices(3, 20), multi_indices(3, 20))
def test_log_path_agrees_with_exact(alpha, beta):
    """Log-gamma path matches the exact path to 1e-12 relative."""
    exact = merge_weight(alpha, beta)
    assert math.exp(log_merge_weight(alpha, beta)) == pytest.approx(exact, rel=1e-12)


def test_merge_weight_beyond_exact_limit_is_finite():
    """Degree 300 goes through the log path without overflow."""
    value = merge_weight((100, 50), (100, 50))
    assert math.isfinite(value)
    assert value > 1e10


def test_raising_weight():
    """``sqrt((d+a)!/d!)``."""
    assert raising_weight((0,), (1,)) == 1.0
    assert raising_weight((2,), (1,)) == pytest.approx(math.sqrt(3.0))
    assert raising_weight((1, 1), (1, 2)) == pytest.approx(math.sqrt(2 * 6))
