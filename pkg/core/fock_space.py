"""Truncated symmetric Fock space.

Vectors are sparse maps ``alpha -> c_alpha`` over the basis ``u_alpha`` with
``|alpha| <= N``. Operations that can push weight past ``N`` drop it and
report the dropped squared norm in ``truncation_loss``.

Phase-space conventions used throughout ``core``:

- ``X = (q, p)``, ``z_j = (q_j + i p_j) / sqrt(2h)``;
- ``sigma((q, p), (q', p')) = p.q' - q.p'``;
- coherent state ``Psi_X = exp(-|X|^2/4h) exp(z . a*) Psi_0``.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm
from scipy.special import gammainc

from core.errors import ModeIndexError, SpecMismatchError, TruncationError
from core.multi_index import (
    MultiIndex,
    TruncationSpec,
    basis_index,
    degree,
    enumerate_basis,
    factorial_multi,
    merge_weight,
)
from core.operator_matrix import OperatorMatrix
from core.validation import validate_fock_payload

logger = logging.getLogger(__name__)

Vector = Tuple[float, ...]


# ----------------------------------------------------------------------------
# Phase points
# ----------------------------------------------------------------------------
@dataclass(frozen=True)
class PhasePoint:
    """Point ``X = (q, p)`` of the real phase space ``R^n x R^n``."""

    q: Vector
    p: Vector

    def __post_init__(self) -> None:
        q = tuple(float(v) for v in self.q)
        p = tuple(float(v) for v in self.p)
        if len(q) != len(p):
            raise ValueError(f"PhasePoint: len(q)={len(q)} differs from len(p)={len(p)}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    @classmethod
    def from_vector(cls, x: Sequence[float]) -> "PhasePoint":
        """Build from the concatenation ``(q_1..q_n, p_1..p_n)``."""
        arr = np.asarray(x, dtype=float).ravel()
        if arr.size % 2:
            raise ValueError("PhasePoint.from_vector: odd length")
        n = arr.size // 2
        return cls(tuple(arr[:n]), tuple(arr[n:]))

    @classmethod
    def origin(cls, modes: int) -> "PhasePoint":
        """The point ``X = 0``."""
        return cls((0.0,) * modes, (0.0,) * modes)

    @property
    def modes(self) -> int:
        """Number of modes ``n``."""
        return len(self.q)

    def vector(self) -> np.ndarray:
        """``(q, p)`` as one real array."""
        return np.array(self.q + self.p, dtype=float)

    def norm_sq(self) -> float:
        """``|X|^2 = |q|^2 + |p|^2``."""
        return float(np.dot(self.vector(), self.vector()))

    def z(self, h: float) -> np.ndarray:
        """Complex coordinates ``(q + i p) / sqrt(2h)``."""
        return (np.array(self.q) + 1j * np.array(self.p)) / math.sqrt(2.0 * h)

    def dot(self, other: "PhasePoint") -> float:
        """Real inner product ``q.q' + p.p'``."""
        return float(np.dot(self.vector(), other.vector()))

    def symplectic(self, other: "PhasePoint") -> float:
        """``sigma(X, Y) = p.q' - q.p'``."""
        return float(np.dot(self.p, other.q) - np.dot(self.q, other.p))

    def __add__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint.from_vector(self.vector() + other.vector())

    def __sub__(self, other: "PhasePoint") -> "PhasePoint":
        return PhasePoint.from_vector(self.vector() - other.vector())

    def __neg__(self) -> "PhasePoint":
        return PhasePoint.from_vector(-self.vector())


def _check_h(h: float) -> None:
    if not h > 0:
        raise ValueError(f"h must be > 0, got {h!r}")


# ----------------------------------------------------------------------------
# Fock vectors
# ----------------------------------------------------------------------------
@dataclass(frozen=True)
class FockVector:
    """Truncated element of the symmetric Fock space."""

    spec: TruncationSpec
    coeffs: Dict[MultiIndex, complex] = field(default_factory=dict)
    truncation_loss: float = 0.0

    def __post_init__(self) -> None:
        clean: Dict[MultiIndex, complex] = {}
        for alpha, c in self.coeffs.items():
            key = tuple(int(a) for a in alpha)
            if not self.spec.contains(key):
                raise ValueError(f"FockVector: index {key} not in {self.spec}")
            if c != 0:
                clean[key] = complex(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def basis(cls, spec: TruncationSpec, alpha: Sequence[int]) -> "FockVector":
        """Basis vector ``u_alpha``."""
        return cls(spec, {tuple(alpha): 1.0})

    @classmethod
    def from_array(cls, spec: TruncationSpec, values: np.ndarray,
                   truncation_loss: float = 0.0) -> "FockVector":
        """From a dense array in basis order."""
        arr = np.asarray(values, dtype=complex)
        return cls(
            spec,
            {alpha: arr[k] for k, alpha in enumerate(enumerate_basis(spec)) if arr[k] != 0},
            truncation_loss,
        )

    def to_array(self) -> np.ndarray:
        """Dense array in basis order."""
        out = np.zeros(self.spec.basis_size, dtype=complex)
        index = basis_index(self.spec)
        for alpha, c in self.coeffs.items():
            out[index[alpha]] = c
        return out

    def coeff(self, alpha: Sequence[int]) -> complex:
        """Coefficient of ``u_alpha`` (0 when absent)."""
        return self.coeffs.get(tuple(alpha), 0j)

    def norm(self) -> float:
        """Hilbert norm."""
        return math.sqrt(sum(abs(c) ** 2 for c in self.coeffs.values()))

    def max_degree_present(self) -> int:
        """Largest ``|alpha|`` with a nonzero coefficient, ``-1`` for zero."""
        return max((degree(a) for a in self.coeffs), default=-1)

    def embed(self, spec: TruncationSpec) -> "FockVector":
        """Same coefficients in a larger truncation."""
        if spec.modes != self.spec.modes or spec.max_degree < self.max_degree_present():
            raise SpecMismatchError(f"cannot embed {self.spec} into {spec}")
        return FockVector(spec, self.coeffs, self.truncation_loss)

    def _check(self, other: "FockVector") -> None:
        if other.spec != self.spec:
            raise SpecMismatchError(f"vector specs differ: {self.spec} vs {other.spec}")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, 0) + c
        return FockVector(self.spec, out, self.truncation_loss + other.truncation_loss)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other * -1.0

    def __mul__(self, factor: complex) -> "FockVector":
        return FockVector(
            self.spec,
            {alpha: factor * c for alpha, c in self.coeffs.items()},
            abs(factor) ** 2 * self.truncation_loss,
        )

    __rmul__ = __mul__

    # -----------------------------
    # IMPORT/EXPORT
    # -----------------------------
    def to_dict(self) -> Dict[str, Any]:
        """``{modes, max_degree, entries: [[alpha, re, im], ...]}`` in basis order."""
        index = basis_index(self.spec)
        entries = sorted(self.coeffs.items(), key=lambda kv: index[kv[0]])
        return {
            "modes": self.spec.modes,
            "max_degree": self.spec.max_degree,
            "entries": [[list(alpha), c.real, c.imag] for alpha, c in entries],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FockVector":
        """Inverse of :meth:`to_dict`."""
        spec = TruncationSpec(int(data["modes"]), int(data["max_degree"]))
        return cls(
            spec,
            {tuple(alpha): complex(re, im) for alpha, re, im in data["entries"]},
        )

    def export_json(self, file_path: str) -> None:
        """Write :meth:`to_dict` to ``file_path``."""
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2)

    @classmethod
    def import_json(cls, file_path: str) -> Optional["FockVector"]:
        """Read a vector written by :meth:`export_json`; ``None`` on failure."""
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except (IOError, json.JSONDecodeError) as e:
            logger.error("Failed to read Fock vector from %s: %s", file_path, e)
            return None
        if not validate_fock_payload(data):
            return None
        return cls.from_dict(data)


def vacuum(spec: TruncationSpec) -> FockVector:
    """``Psi_0 = u_0``."""
    return FockVector.basis(spec, (0,) * spec.modes)


def inner(f: FockVector, g: FockVector) -> complex:
    """``<f, g>``, linear in ``f`` and conjugate-linear in ``g``."""
    if f.spec != g.spec:
        raise SpecMismatchError(f"inner: specs differ ({f.spec} vs {g.spec})")
    return complex(sum(c * np.conj(g.coeffs.get(alpha, 0)) for alpha, c in f.coeffs.items()))


def weighted_norm(f: FockVector, R: float) -> float:  # pylint: disable=invalid-name
    """``sqrt(sum |c_alpha|^2 R^|alpha|)`` for ``R >= 1``."""
    if not R >= 1:
        raise ValueError(f"weighted_norm: R must be >= 1, got {R!r}")
    return math.sqrt(sum(abs(c) ** 2 * R ** degree(a) for a, c in f.coeffs.items()))


# ----------------------------------------------------------------------------
# Ladder operators
# ----------------------------------------------------------------------------
def _mode(j: int, spec: TruncationSpec) -> int:
    if not 1 <= j <= spec.modes:
        raise ModeIndexError(f"mode index {j} outside 1..{spec.modes}")
    return j - 1


def create(j: int, f: FockVector) -> FockVector:
    """``a*(e_j) f``; weight pushed above ``N`` is dropped and reported."""
    k = _mode(j, f.spec)
    out: Dict[MultiIndex, complex] = {}
    lost = 0.0
    for alpha, c in f.coeffs.items():
        value = c * math.sqrt(alpha[k] + 1)
        if degree(alpha) + 1 > f.spec.max_degree:
            lost += abs(value) ** 2
            continue
        beta = alpha[:k] + (alpha[k] + 1,) + alpha[k + 1:]
        out[beta] = out.get(beta, 0) + value
    if lost:
        logger.debug("create(%d): dropped mass %.3e above degree %d", j, lost, f.spec.max_degree)
    return FockVector(f.spec, out, lost)


def annihilate(j: int, f: FockVector) -> FockVector:
    """``a(e_j) f``."""
    k = _mode(j, f.spec)
    out: Dict[MultiIndex, complex] = {}
    for alpha, c in f.coeffs.items():
        if alpha[k] == 0:
            continue
        beta = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
        out[beta] = out.get(beta, 0) + c * math.sqrt(alpha[k])
    return FockVector(f.spec, out)


def create_along(direction: Sequence[float], f: FockVector) -> FockVector:
    """``a*(V) f = sum_j V_j a*(e_j) f``."""
    if len(direction) != f.spec.modes:
        raise SpecMismatchError("create_along: direction length differs from modes")
    out = FockVector(f.spec)
    for j, v in enumerate(direction, start=1):
        if v:
            out = out + create(j, f) * v
    return out


def annihilate_along(direction: Sequence[float], f: FockVector) -> FockVector:
    """``a(V) f = sum_j conj(V_j) a(e_j) f``."""
    if len(direction) != f.spec.modes:
        raise SpecMismatchError("annihilate_along: direction length differs from modes")
    out = FockVector(f.spec)
    for j, v in enumerate(direction, start=1):
        if v:
            out = out + annihilate(j, f) * np.conj(v)
    return out


def creation_matrix(j: int, spec: TruncationSpec) -> np.ndarray:
    """Dense truncated ``a*_j``."""
    k = _mode(j, spec)
    index = basis_index(spec)
    mat = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for alpha, col in index.items():
        if degree(alpha) < spec.max_degree:
            beta = alpha[:k] + (alpha[k] + 1,) + alpha[k + 1:]
            mat[index[beta], col] = math.sqrt(alpha[k] + 1)
    return mat


def annihilation_matrix(j: int, spec: TruncationSpec) -> np.ndarray:
    """Dense truncated ``a_j`` (transpose of the creation matrix)."""
    return creation_matrix(j, spec).T.copy()


# ----------------------------------------------------------------------------
# Composition law I
# ----------------------------------------------------------------------------
def compose_I(f: FockVector, g: FockVector, strict: bool = False,  # pylint: disable=invalid-name
              spec: Optional[TruncationSpec] = None) -> FockVector:
    """Bilinear product ``I(u_alpha, u_beta) = merge_weight(alpha, beta) u_{alpha+beta}``.

    ``spec`` selects the target truncation (same modes, default ``f.spec``).
    Terms above its degree raise :class:`TruncationError` when ``strict`` and
    are otherwise dropped with their squared mass reported.
    """
    if f.spec != g.spec:
        raise SpecMismatchError(f"compose_I: specs differ ({f.spec} vs {g.spec})")
    target = spec or f.spec
    if target.modes != f.spec.modes:
        raise SpecMismatchError("compose_I: target spec has another mode count")
    out: Dict[MultiIndex, complex] = {}
    dropped: Dict[MultiIndex, complex] = {}
    for alpha, c in f.coeffs.items():
        for beta, d in g.coeffs.items():
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            value = c * d * merge_weight(alpha, beta)
            if degree(gamma) > target.max_degree:
                if strict:
                    raise TruncationError(
                        f"compose_I: degree {degree(gamma)} exceeds {target.max_degree}"
                    )
                dropped[gamma] = dropped.get(gamma, 0) + value
                continue
            out[gamma] = out.get(gamma, 0) + value
    lost = sum(abs(v) ** 2 for v in dropped.values())
    if lost > 1e-12:
        logger.warning("compose_I: dropped mass %.3e above degree %d", lost, target.max_degree)
    return FockVector(target, out, lost)


# ----------------------------------------------------------------------------
# Coherent states
# ----------------------------------------------------------------------------
def coherent_tail_mass(x: PhasePoint, h: float, max_degree: int) -> float:
    """``1 - ||Psi_X^N||^2``, a regularised incomplete gamma in ``|X|^2/2h``."""
    _check_h(h)
    t = x.norm_sq() / (2.0 * h)
    if t == 0:
        return 0.0
    return float(gammainc(max_degree + 1, t))


def coherent_state(x: PhasePoint, h: float, spec: TruncationSpec) -> FockVector:
    """Truncated ``Psi_{X,h}``; the tail mass is stored in ``truncation_loss``."""
    _check_h(h)
    if x.modes != spec.modes:
        raise SpecMismatchError(f"coherent_state: point has {x.modes} modes, spec {spec.modes}")
    z = x.z(h)
    prefactor = math.exp(-x.norm_sq() / (4.0 * h))
    coeffs = {
        alpha: prefactor * np.prod(z ** np.array(alpha)) / math.sqrt(factorial_multi(alpha))
        for alpha in enumerate_basis(spec)
    }
    return FockVector(spec, coeffs, coherent_tail_mass(x, h, spec.max_degree))


def coherent_overlap(x: PhasePoint, y: PhasePoint, h: float) -> complex:
    """Closed form ``<Psi_X, Psi_Y> = exp(-|X-Y|^2/4h + i sigma(X,Y)/2h)``."""
    _check_h(h)
    return complex(np.exp(-(x - y).norm_sq() / (4.0 * h) + 1j * x.symplectic(y) / (2.0 * h)))


def coherent_product_check(x: PhasePoint, y: PhasePoint, h: float,
                           spec: TruncationSpec) -> float:
    """``||I(Psi_X^N, Psi_Y^N) - exp(X.Y/2h) Psi_{X+Y}^N||``.

    The product is formed in degree ``2N`` so the binomial rest term above
    ``N`` is kept; it is what the residual measures.
    """
    wide = spec.with_degree(2 * spec.max_degree)
    product = compose_I(coherent_state(x, h, spec), coherent_state(y, h, spec), spec=wide)
    target = coherent_state(x + y, h, spec).embed(wide) * math.exp(x.dot(y) / (2.0 * h))
    return (product - target).norm()


# bruit d'arrondi toléré entre deux résidus successifs
DECAY_NOISE = 1e-14


def coherent_product_trail(x: PhasePoint, y: PhasePoint, h: float, modes: int,
                           degrees: Sequence[int] = (4, 8, 12, 16)) -> List[float]:
    """:func:`coherent_product_check` residuals for increasing ``N``."""
    return [coherent_product_check(x, y, h, TruncationSpec(modes, n)) for n in degrees]


def decays(trail: Sequence[float], noise: float = DECAY_NOISE) -> bool:
    """Non-increasing up to ``noise``; flat trails on the rounding floor count."""
    return all(b <= a + noise for a, b in zip(trail, trail[1:]))


# ----------------------------------------------------------------------------
# Displacement operators
# ----------------------------------------------------------------------------
def displacement(x: PhasePoint, h: float, spec: TruncationSpec) -> OperatorMatrix:
    """``V_h(X) = exp(sum_j z_j a*_j - conj(z_j) a_j)`` on the truncated basis.

    The exponent is ``(-i/sqrt(h)) Phi_S(X^)`` with ``X^ = (-p, q)``; scipy's
    scaling-and-squaring Pade ``expm`` does the exponential.
    """
    _check_h(h)
    z = x.z(h)
    generator = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for j in range(1, spec.modes + 1):
        a_dag = creation_matrix(j, spec)
        generator += z[j - 1] * a_dag - np.conj(z[j - 1]) * a_dag.T
    return OperatorMatrix(spec, expm(generator))


def displacement_composition_check(u: PhasePoint, v: PhasePoint, h: float,
                                   spec: TruncationSpec, probe_degree: int) -> float:
    """Max entry of ``V(U)V(V) - exp(i sigma(U,V)/2h) V(U+V)`` on degrees ``<= probe_degree``."""
    lhs = displacement(u, h, spec) @ displacement(v, h, spec)
    rhs = displacement(u + v, h, spec) * np.exp(1j * u.symplectic(v) / (2.0 * h))
    return lhs.max_abs_diff(rhs, probe_degree)
