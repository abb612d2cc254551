"""Dense operators on the truncated Fock basis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, Optional

import numpy as np

from core.errors import SpecMismatchError
from core.multi_index import TruncationSpec, degree, enumerate_basis
from core.validation import validate_matrix_payload

if TYPE_CHECKING:  # pragma: no cover
    from core.fock_space import FockVector


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Square complex matrix indexed by :func:`core.multi_index.enumerate_basis`."""

    spec: TruncationSpec
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=complex)
        size = self.spec.basis_size
        if arr.shape != (size, size):
            raise ValueError(
                f"OperatorMatrix: expected shape {(size, size)}, got {arr.shape}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    # -----------------------------
    # CONSTRUCTION
    # -----------------------------
    @classmethod
    def identity(cls, spec: TruncationSpec) -> "OperatorMatrix":
        """Identity on the truncated space."""
        return cls(spec, np.eye(spec.basis_size, dtype=complex))

    @classmethod
    def zeros(cls, spec: TruncationSpec) -> "OperatorMatrix":
        """Zero operator."""
        return cls(spec, np.zeros((spec.basis_size, spec.basis_size), dtype=complex))

    # -----------------------------
    # ALGEBRA
    # -----------------------------
    def _check(self, other: "OperatorMatrix") -> None:
        if other.spec != self.spec:
            raise SpecMismatchError(f"operator specs differ: {self.spec} vs {other.spec}")

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.spec, self.entries @ other.entries)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.spec, self.entries + other.entries)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check(other)
        return OperatorMatrix(self.spec, self.entries - other.entries)

    def __mul__(self, factor: complex) -> "OperatorMatrix":
        return OperatorMatrix(self.spec, complex(factor) * self.entries)

    __rmul__ = __mul__

    def adjoint(self) -> "OperatorMatrix":
        """Conjugate transpose."""
        return OperatorMatrix(self.spec, self.entries.conj().T)

    def apply(self, f: "FockVector") -> "FockVector":
        """Matrix-vector product."""
        from core.fock_space import FockVector  # pylint: disable=import-outside-toplevel

        if f.spec != self.spec:
            raise SpecMismatchError(f"vector spec {f.spec} differs from {self.spec}")
        return FockVector.from_array(self.spec, self.entries @ f.to_array())

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        """Hermitian up to ``tol`` (max entry)."""
        return bool(np.max(np.abs(self.entries - self.entries.conj().T), initial=0.0) <= tol)

    # -----------------------------
    # SAFE BLOCKS
    # -----------------------------
    def block_indices(self, max_degree: int) -> np.ndarray:
        """Positions of basis vectors of degree ``<= max_degree``."""
        return np.array(
            [k for k, alpha in enumerate(enumerate_basis(self.spec)) if degree(alpha) <= max_degree],
            dtype=int,
        )

    def block(self, max_degree: int) -> np.ndarray:
        """Sub-matrix on rows and columns of degree ``<= max_degree``."""
        idx = self.block_indices(max_degree)
        return self.entries[np.ix_(idx, idx)]

    def max_abs_diff(self, other: "OperatorMatrix", max_degree: Optional[int] = None) -> float:
        """Largest entry difference, optionally on the safe block only."""
        self._check(other)
        if max_degree is None:
            diff = self.entries - other.entries
        else:
            if max_degree < 0:
                return 0.0
            diff = self.block(max_degree) - other.block(max_degree)
        return float(np.max(np.abs(diff), initial=0.0))

    # -----------------------------
    # SERIALISATION
    # -----------------------------
    def to_dict(self) -> Dict[str, Any]:
        """Row-major complex pairs in basis order."""
        return {
            "modes": self.spec.modes,
            "max_degree": self.spec.max_degree,
            "entries": [
                [[float(z.real), float(z.imag)] for z in row] for row in self.entries
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OperatorMatrix":
        """Inverse of :meth:`to_dict`."""
        if not validate_matrix_payload(data):
            raise ValueError("OperatorMatrix.from_dict: invalid payload")
        spec = TruncationSpec(int(data["modes"]), int(data["max_degree"]))
        arr = np.array(
            [[complex(re, im) for re, im in row] for row in data["entries"]], dtype=complex
        )
        return cls(spec, arr)
