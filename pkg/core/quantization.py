"""Wick, anti-Wick and Weyl quantization on the truncated Fock space.

Normal-ordered ladder polynomials ``sum c_{ab} a*^a a^b`` are the bridge
between symbols and matrices: the Wick symbol of ``a*^a a^b`` is
``zbar^a z^b`` with ``z = (q + i p)/sqrt(2h)``.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from core.bargmann import phi_moment_table, t_fh
from core.errors import SpecMismatchError, UnsupportedSymbolError
from core.fock_space import (
    FockVector,
    PhasePoint,
    coherent_state,
    creation_matrix,
    displacement,
)
from core.multi_index import (
    MultiIndex,
    TruncationSpec,
    basis_index,
    degree,
    enumerate_basis,
    factorial_multi,
    merge_weight,
    raising_weight,
)
from core.operator_matrix import OperatorMatrix
from core.polynomials import Poly, linear_form, poly_substitute
from core.symbol_algebra import PhaseSymbol, heat_apply, to_complex_coordinates

logger = logging.getLogger(__name__)

LadderKey = Tuple[MultiIndex, MultiIndex]


@dataclass(frozen=True, eq=False)
class LadderPolynomial:
    """Normal-ordered ``sum c_{ab} a*^a a^b``; keys are ``(a, b)``."""

    modes: int
    terms: Dict[LadderKey, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[LadderKey, complex] = {}
        for (alpha, beta), c in self.terms.items():
            key = (tuple(int(a) for a in alpha), tuple(int(b) for b in beta))
            if len(key[0]) != self.modes or len(key[1]) != self.modes:
                raise ValueError(f"LadderPolynomial: term {key} has wrong mode count")
            if c != 0:
                clean[key] = clean.get(key, 0) + complex(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def identity(cls, modes: int) -> "LadderPolynomial":
        """``1``."""
        zero = (0,) * modes
        return cls(modes, {(zero, zero): 1.0})

    @classmethod
    def number(cls, modes: int, j: int) -> "LadderPolynomial":
        """``a*_j a_j`` (``j`` 1-based)."""
        e = tuple(1 if k == j - 1 else 0 for k in range(modes))
        return cls(modes, {(e, e): 1.0})

    def degree(self) -> int:
        """Largest ``|a| + |b|``."""
        return max((degree(a) + degree(b) for a, b in self.terms), default=-1)

    def adjoint(self) -> "LadderPolynomial":
        """``(a*^a a^b)^* = a*^b a^a``."""
        return LadderPolynomial(
            self.modes, {(b, a): np.conj(c) for (a, b), c in self.terms.items()}
        )

    def __add__(self, other: "LadderPolynomial") -> "LadderPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return LadderPolynomial(self.modes, out)

    def scale(self, factor: complex) -> "LadderPolynomial":
        """``factor * L``."""
        return LadderPolynomial(self.modes, {k: factor * c for k, c in self.terms.items()})


# ----------------------------------------------------------------------------
# Ladder polynomials <-> matrices
# ----------------------------------------------------------------------------
def ladder_to_matrix(ladder: LadderPolynomial, spec: TruncationSpec) -> OperatorMatrix:
    """Truncated matrix of ``L``: ``a*^a a^b u_d = sqrt(d! g!)/r! u_g``, ``r = d - b``, ``g = r + a``."""
    if ladder.modes != spec.modes:
        raise SpecMismatchError("ladder_to_matrix: mode counts differ")
    index = basis_index(spec)
    mat = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for (alpha, beta), c in ladder.terms.items():
        for delta, col in index.items():
            rho = tuple(d - b for d, b in zip(delta, beta))
            if min(rho) < 0:
                continue
            gamma = tuple(r + a for r, a in zip(rho, alpha))
            if degree(gamma) > spec.max_degree:
                continue
            mat[index[gamma], col] += c * raising_weight(rho, alpha) * raising_weight(rho, beta)
    return OperatorMatrix(spec, mat)


def matrix_to_ladder(op: OperatorMatrix, max_order: Optional[int] = None,
                     drop_tol: float = 1e-14) -> LadderPolynomial:
    """Exact normal-ordered expansion of a truncated matrix.

    Solves ``M[g, d] = sum_{r <= min(g, d)} c_{g-r, d-r} sqrt(g! d!) / r!``
    by increasing ``|g| + |d|``; ``max_order`` stops at that total degree.
    """
    spec = op.spec
    basis = enumerate_basis(spec)
    index = basis_index(spec)
    pairs = [
        (gamma, delta) for gamma in basis for delta in basis
        if max_order is None or degree(gamma) + degree(delta) <= max_order
    ]
    pairs.sort(key=lambda gd: degree(gd[0]) + degree(gd[1]))
    coeffs: Dict[LadderKey, complex] = {}
    for gamma, delta in pairs:
        value = op.entries[index[gamma], index[delta]] / math.sqrt(
            factorial_multi(gamma) * factorial_multi(delta)
        )
        lows = [min(g, d) for g, d in zip(gamma, delta)]
        for rho in itertools.product(*(range(m + 1) for m in lows)):
            if not any(rho):
                continue
            key = (
                tuple(g - r for g, r in zip(gamma, rho)),
                tuple(d - r for d, r in zip(delta, rho)),
            )
            if key in coeffs:
                value -= coeffs[key] / factorial_multi(rho)
        if abs(value) > drop_tol:
            coeffs[(gamma, delta)] = complex(value)
    return LadderPolynomial(spec.modes, coeffs)


# ----------------------------------------------------------------------------
# Wick symbols
# ----------------------------------------------------------------------------
def normal_symbol(ladder: LadderPolynomial, h: float) -> PhaseSymbol:
    """Exact Wick symbol ``sum c_{ab} zbar^a z^b``."""
    n = ladder.modes
    scale = 1.0 / math.sqrt(2.0 * h)
    forms: List[Poly] = []
    for j in range(n):  # zbar_j
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = scale, -1j * scale
        forms.append(linear_form(coeffs))
    for j in range(n):  # z_j
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = scale, 1j * scale
        forms.append(linear_form(coeffs))
    packed: Poly = {}
    for (alpha, beta), c in ladder.terms.items():
        packed[alpha + beta] = packed.get(alpha + beta, 0) + c
    return PhaseSymbol.from_poly(n, poly_substitute(packed, forms, 2 * n))


def symbol_to_ladder(sym: PhaseSymbol, h: float) -> LadderPolynomial:
    """Inverse of :func:`normal_symbol` on polynomial symbols."""
    n = sym.modes
    s = math.sqrt(h / 2.0)
    forms: List[Poly] = []
    for j in range(n):  # q_j = s (zbar_j + z_j)
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = s, s
        forms.append(linear_form(coeffs))
    for j in range(n):  # p_j = i s (zbar_j - z_j)
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = 1j * s, -1j * s
        forms.append(linear_form(coeffs))
    packed = poly_substitute(sym.polynomial(), forms, 2 * n)
    return LadderPolynomial(n, {(e[:n], e[n:]): c for e, c in packed.items()})


def wick_to_operator(sym: PhaseSymbol, h: float, spec: TruncationSpec) -> OperatorMatrix:
    """Truncated operator whose exact Wick symbol is the polynomial ``F``."""
    if not sym.is_polynomial():
        raise UnsupportedSymbolError("wick_to_operator: plane-wave terms present")
    return ladder_to_matrix(symbol_to_ladder(sym, h), spec)


def matrix_wick_symbol(op: OperatorMatrix, h: float, max_order: Optional[int] = None
                       ) -> PhaseSymbol:
    """Exact polynomial Wick symbol of a truncated matrix."""
    return normal_symbol(matrix_to_ladder(op, max_order), h)


def wick_symbol_eval(op: OperatorMatrix, h: float, x: PhasePoint) -> Tuple[complex, float]:
    """``<A Psi_X, Psi_X>`` with truncated coherent states, and their tail mass."""
    psi = coherent_state(x, h, op.spec)
    vec = psi.to_array()
    return complex(np.vdot(vec, op.entries @ vec)), psi.truncation_loss


def two_point_symbol(op: OperatorMatrix, h: float, x: PhasePoint, y: PhasePoint) -> complex:
    """``<B Psi_X, Psi_Y> / <Psi_X, Psi_Y>``; on the diagonal it is the Wick symbol."""
    psi_x = coherent_state(x, h, op.spec).to_array()
    psi_y = coherent_state(y, h, op.spec).to_array()
    return complex(np.vdot(psi_y, op.entries @ psi_x) / np.vdot(psi_y, psi_x))


# ----------------------------------------------------------------------------
# Anti-Wick and Weyl
# ----------------------------------------------------------------------------
def anti_wick_op(sym: PhaseSymbol, h: float, spec: TruncationSpec) -> OperatorMatrix:
    """``M[a, b] = int F Phi_b conj(Phi_a) dmu_h`` by exact complex Gaussian moments.

    Each term ``P(Y) exp(i c.Y)`` becomes ``exp(-h|c|^2/2) E[(P g)(Y + i h c)]``,
    which shifts ``zeta`` by ``i h c_q + h c_p`` and ``zetabar`` by ``i h c_q - h c_p``.
    """
    if sym.modes != spec.modes:
        raise SpecMismatchError("anti_wick_op: symbol and spec mode counts differ")
    n = spec.modes
    basis = np.array(enumerate_basis(spec), dtype=int)
    mat = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for freq, poly in sym.terms.items():
        c = np.asarray(freq, dtype=float)
        shifts_s = 1j * h * c[:n] + h * c[n:]
        shifts_t = 1j * h * c[:n] - h * c[n:]
        damping = math.exp(-h * float(c @ c) / 2.0)
        zeta_poly = to_complex_coordinates(PhaseSymbol.from_poly(n, poly))
        tables: Dict[Tuple[int, int, int], np.ndarray] = {}
        for e, coeff in zeta_poly.items():
            block = np.full((spec.basis_size, spec.basis_size), damping * coeff, dtype=complex)
            for j in range(n):
                key = (j, e[j], e[n + j])
                if key not in tables:
                    tables[key] = phi_moment_table(
                        e[j], e[n + j], spec.max_degree, h, shifts_s[j], shifts_t[j]
                    )
                block *= tables[key][np.ix_(basis[:, j], basis[:, j])]
            mat += block
    return OperatorMatrix(spec, mat)


def position_operator(j: int, h: float, spec: TruncationSpec) -> np.ndarray:
    """``q_j^ = sqrt(h/2) (a_j + a*_j)``."""
    a_dag = creation_matrix(j, spec)
    return math.sqrt(h / 2.0) * (a_dag + a_dag.T)


def momentum_operator(j: int, h: float, spec: TruncationSpec) -> np.ndarray:
    """``p_j^ = i sqrt(h/2) (a*_j - a_j)``."""
    a_dag = creation_matrix(j, spec)
    return 1j * math.sqrt(h / 2.0) * (a_dag - a_dag.T)


def weyl_op(sym: PhaseSymbol, h: float, spec: TruncationSpec) -> OperatorMatrix:
    """Weyl quantization.

    Polynomials: the operator whose Wick symbol is ``H_{h/2} G``. Sums of
    constant-coefficient plane waves: ``sum c exp(i a.X^)`` by ``expm``.
    """
    if sym.is_polynomial():
        return wick_to_operator(heat_apply(sym, h / 2.0), h, spec)
    zero = (0,) * sym.nvars
    if any(set(p) != {zero} for p in sym.terms.values()):
        raise UnsupportedSymbolError("weyl_op: mixed polynomial x plane-wave terms")
    n = spec.modes
    q_ops = [position_operator(j, h, spec) for j in range(1, n + 1)]
    p_ops = [momentum_operator(j, h, spec) for j in range(1, n + 1)]
    mat = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for freq, poly in sym.terms.items():
        gen = sum(freq[j] * q_ops[j] + freq[n + j] * p_ops[j] for j in range(n))
        mat += poly[zero] * expm(1j * gen)
    return OperatorMatrix(spec, mat)


# ----------------------------------------------------------------------------
# Identification operator
# ----------------------------------------------------------------------------
def identification_op(u: FockVector, spec: TruncationSpec) -> OperatorMatrix:
    """``J phi = I(U, phi)``: column ``u_b`` is ``I(U, u_b)``, truncated."""
    if u.spec.modes != spec.modes:
        raise SpecMismatchError("identification_op: mode counts differ")
    index = basis_index(spec)
    mat = np.zeros((spec.basis_size, spec.basis_size), dtype=complex)
    for beta, col in index.items():
        for alpha, c in u.coeffs.items():
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            if degree(gamma) <= spec.max_degree:
                mat[index[gamma], col] += c * merge_weight(alpha, beta)
    return OperatorMatrix(spec, mat)


def identification_ops(components: Sequence[FockVector], spec: TruncationSpec
                       ) -> List[OperatorMatrix]:
    """One ``J_lambda`` per independent component ``U_lambda``."""
    return [identification_op(u, spec) for u in components]


def t_j_equality_check(u: FockVector, spec: TruncationSpec) -> float:
    """Max entry of ``J - Op^AW_1(T^FH U)`` on the block of degree ``<= N - deg U``."""
    deg = max(u.max_degree_present(), 0)
    j_op = identification_op(u, spec)
    aw_op = anti_wick_op(t_fh(u, 1.0).to_symbol(), 1.0, spec)
    return j_op.max_abs_diff(aw_op, spec.max_degree - deg)


def displacement_covariance_check(op: OperatorMatrix, x: PhasePoint, h: float,
                                  points: Sequence[PhasePoint]) -> float:
    """``max_Y |sigma(V(X) A V(-X))(Y) - sigma(A)(Y - X)|``."""
    moved = displacement(x, h, op.spec) @ op @ displacement(-x, h, op.spec)
    residual = 0.0
    for y in points:
        lhs, _ = wick_symbol_eval(moved, h, y)
        rhs, _ = wick_symbol_eval(op, h, y - x)
        residual = max(residual, abs(lhs - rhs))
    return residual

