"""Tests for dense truncated operators."""

import numpy as np
import pytest

from core.errors import SpecMismatchError
from core.fock_space import FockVector, creation_matrix
from core.multi_index import TruncationSpec
from core.operator_matrix import OperatorMatrix


def test_shape_is_checked(small_spec):
    """Entries must match the basis size."""
    with pytest.raises(ValueError):
        OperatorMatrix(small_spec, np.zeros((3, 3)))


def test_entries_are_read_only(small_spec):
    """Stored array cannot be mutated in place."""
    op = OperatorMatrix.identity(small_spec)
    with pytest.raises(ValueError):
        op.entries[0, 0] = 2.0


def test_algebra_and_adjoint(one_mode_spec):
    """``(a*)^dagger = a`` and ``I @ A = A``."""
    a_dag = OperatorMatrix(one_mode_spec, creation_matrix(1, one_mode_spec))
    ident = OperatorMatrix.identity(one_mode_spec)
    assert (ident @ a_dag).max_abs_diff(a_dag) == 0.0
    assert (a_dag + a_dag).max_abs_diff(a_dag * 2) == 0.0
    assert (a_dag - a_dag).max_abs_diff(OperatorMatrix.zeros(one_mode_spec)) == 0.0
    number = a_dag @ a_dag.adjoint()
    assert number.is_hermitian()
    assert not a_dag.is_hermitian()


def test_spec_mismatch(one_mode_spec):
    """Operators on different truncations do not combine."""
    other = one_mode_spec.with_degree(3)
    with pytest.raises(SpecMismatchError):
        OperatorMatrix.identity(one_mode_spec) @ OperatorMatrix.identity(other)
    with pytest.raises(SpecMismatchError):
        OperatorMatrix.identity(other).apply(FockVector.basis(one_mode_spec, (1,)))


def test_apply_creation(one_mode_spec):
    """Matrix form agrees with the basis rule."""
    a_dag = OperatorMatrix(one_mode_spec, creation_matrix(1, one_mode_spec))
    out = a_dag.apply(FockVector.basis(one_mode_spec, (2,)))
    assert out.coeff((3,)) == pytest.approx(np.sqrt(3.0))


def test_block_and_safe_diff():
    """Safe block keeps degrees ``<= d`` only."""
    spec = TruncationSpec(2, 3)
    ident = OperatorMatrix.identity(spec)
    assert ident.block(1).shape == (3, 3)
    bumped = np.eye(spec.basis_size, dtype=complex)
    bumped[-1, -1] = 5.0
    other = OperatorMatrix(spec, bumped)
    assert ident.max_abs_diff(other) == pytest.approx(4.0)
    assert ident.max_abs_diff(other, max_degree=2) == 0.0
    assert ident.max_abs_diff(other, max_degree=-1) == 0.0


def test_dict_roundtrip(small_spec, rng):
    """``from_dict(to_dict(A)) == A``."""
    size = small_spec.basis_size
    op = OperatorMatrix(small_spec, rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size)))
    back = OperatorMatrix.from_dict(op.to_dict())
    assert back.spec == small_spec
    assert back.max_abs_diff(op) == 0.0


def test_from_dict_rejects_ragged_rows():
    """Rows of unequal length are refused."""
    with pytest.raises(ValueError):
        OperatorMatrix.from_dict({"modes": 1, "max_degree": 1, "entries": [[[1, 0], [0, 0]], [[0, 0]]]})
