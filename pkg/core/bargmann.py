"""Segal-Bargmann transforms at finite dimension.

``T^FH`` sends ``u_alpha`` to ``Phi_alpha(q, p) = prod_j zeta_j^alpha_j / sqrt(alpha_j!)``
with ``zeta = (q - i p) / sqrt(2h)``. The ``Phi_alpha`` are orthonormal in
``L^2(R^2n, mu_h)`` (centred Gaussian, variance ``h`` per coordinate), which
is what ``T^FW`` uses. Gaussian integrals are exact (Isserlis pairings or
complex moments); quadrature is only used for the reproducing-kernel check.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, NamedTuple, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial.hermite_e import herme2poly, hermegauss

from core.errors import QuadratureError, SpecMismatchError, UnsupportedSymbolError
from core.fock_space import FockVector, PhasePoint, coherent_state, inner
from core.multi_index import (
    MultiIndex,
    TruncationSpec,
    compositions,
    degree,
    enumerate_basis,
    factorial_multi,
    merge_weight,
)
from core.polynomials import (
    Poly,
    clean,
    linear_form,
    poly_add,
    poly_mul,
    poly_pow,
    poly_shift,
    poly_substitute,
)
from core.symbol_algebra import PhaseSymbol, sym_partial

logger = logging.getLogger(__name__)

# ordre maximal accepté pour la quadrature tensorielle
MAX_QUADRATURE_MODES = 3


@dataclass(frozen=True)
class GaussianSpec:
    """Centred Gaussian on ``R^d`` with variance ``h`` per coordinate."""

    dimension: int
    variance: float

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"GaussianSpec: dimension must be >= 1, got {self.dimension}")
        if not self.variance > 0:
            raise ValueError(f"GaussianSpec: variance must be > 0, got {self.variance}")

    def characteristic(self, freq: Sequence[float]) -> float:
        """``E[exp(i a.x)] = exp(-h |a|^2 / 2)``."""
        a = np.asarray(freq, dtype=float)
        return math.exp(-self.variance * float(a @ a) / 2.0)


# ----------------------------------------------------------------------------
# Hermite machinery
# ----------------------------------------------------------------------------
def hermite_orthonormal(k: int, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Degree-``k`` Hermite polynomial, orthonormal for the standard Gaussian."""
    if k < 0:
        raise ValueError(f"hermite_orthonormal: k must be >= 0, got {k}")
    x = np.asarray(x, dtype=float)
    prev, cur = np.zeros_like(x), np.ones_like(x)
    for m in range(k):
        prev, cur = cur, (x * cur - math.sqrt(m) * prev) / math.sqrt(m + 1)
    return float(cur) if cur.ndim == 0 else cur


@lru_cache(maxsize=None)
def gauss_hermite_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Probabilists' Gauss-Hermite nodes and weights normalised to sum to one."""
    if order < 1:
        raise QuadratureError(f"quadrature order must be >= 1, got {order}")
    nodes, weights = hermegauss(order)
    weights = weights / math.sqrt(2.0 * math.pi)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


# ----------------------------------------------------------------------------
# Bargmann polynomials
# ----------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class BargmannPoly:
    """``F = sum_alpha c_alpha Phi_{alpha,h}``."""

    modes: int
    h: float
    coeffs: Dict[MultiIndex, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.h > 0:
            raise ValueError(f"BargmannPoly: h must be > 0, got {self.h}")
        object.__setattr__(
            self, "coeffs", {tuple(a): complex(c) for a, c in self.coeffs.items() if c != 0}
        )

    def degree(self) -> int:
        """Largest ``|alpha|`` present."""
        return max((degree(a) for a in self.coeffs), default=-1)

    def evaluate(self, points: Union[PhasePoint, Sequence[float], np.ndarray]
                 ) -> Union[complex, np.ndarray]:
        """Value at a point or at the rows of an ``(m, 2n)`` array."""
        if isinstance(points, PhasePoint):
            points = points.vector()
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        pts = np.atleast_2d(pts)
        n = self.modes
        zeta = (pts[:, :n] - 1j * pts[:, n:]) / math.sqrt(2.0 * self.h)
        out = np.zeros(pts.shape[0], dtype=complex)
        for alpha, c in self.coeffs.items():
            out += c * np.prod(zeta ** np.array(alpha), axis=1) / math.sqrt(factorial_multi(alpha))
        return complex(out[0]) if single else out

    def to_symbol(self) -> PhaseSymbol:
        """Expanded polynomial in ``(q, p)``."""
        n = self.modes
        scale = 1.0 / math.sqrt(2.0 * self.h)
        zeta = []
        for j in range(n):
            coeffs = [0j] * (2 * n)
            coeffs[j], coeffs[n + j] = scale, -1j * scale
            zeta.append(linear_form(coeffs))
        poly: Poly = {}
        for alpha, c in self.coeffs.items():
            term: Poly = {(0,) * (2 * n): c / math.sqrt(factorial_multi(alpha))}
            for j, a in enumerate(alpha):
                if a:
                    term = poly_mul(term, poly_pow(zeta[j], a, 2 * n))
            poly = poly_add(poly, term)
        return PhaseSymbol.from_poly(n, poly)

    def multiply(self, other: "BargmannPoly") -> "BargmannPoly":
        """Pointwise product, through ``Phi_a Phi_b = merge_weight(a, b) Phi_{a+b}``."""
        if other.modes != self.modes or other.h != self.h:
            raise SpecMismatchError("BargmannPoly.multiply: modes or h differ")
        out: Dict[MultiIndex, complex] = {}
        for alpha, c in self.coeffs.items():
            for beta, d in other.coeffs.items():
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                out[gamma] = out.get(gamma, 0) + c * d * merge_weight(alpha, beta)
        return BargmannPoly(self.modes, self.h, out)

    def annihilation_derivative(self, direction: Sequence[float]) -> PhaseSymbol:
        """``sqrt(h/2) V.(d_q + i d_p)`` applied to the expanded polynomial."""
        sym = self.to_symbol()
        out = PhaseSymbol.zero(self.modes)
        for j, v in enumerate(direction, start=1):
            if v:
                d = sym_partial(sym, "q", j) + sym_partial(sym, "p", j).scale(1j)
                out = out + d.scale(v * math.sqrt(self.h / 2.0))
        return out


def creation_multiplier(direction: Sequence[float], h: float) -> PhaseSymbol:
    """``(2h)^{-1/2} (V.q - i V.p)``: the image of ``a*(V)`` under ``T^FH``."""
    n = len(direction)
    scale = 1.0 / math.sqrt(2.0 * h)
    coeffs = [scale * v for v in direction] + [-1j * scale * v for v in direction]
    return PhaseSymbol.from_poly(n, linear_form(coeffs))


def t_fh(f: FockVector, h: float) -> BargmannPoly:
    """``T^FH f``: same coefficients read against ``Phi_{alpha,h}``."""
    return BargmannPoly(f.spec.modes, h, f.coeffs)


def t_fh_eval(f: FockVector, h: float, x: PhasePoint) -> complex:
    """``<f, Psi_X> / <Psi_0, Psi_X>``, through truncated coherent states."""
    psi = coherent_state(x, h, f.spec)
    return inner(f, psi) * math.exp(x.norm_sq() / (4.0 * h))


# ----------------------------------------------------------------------------
# Exact Gaussian integrals
# ----------------------------------------------------------------------------
def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def gaussian_poly_expectation(poly: Poly, variance: float) -> complex:
    """``E[P(x)]`` for iid centred coordinates of variance ``h`` (Isserlis)."""
    total = 0j
    for e, c in poly.items():
        if any(k % 2 for k in e):
            continue
        weight = 1.0
        for k in e:
            weight *= _double_factorial(k - 1) * variance ** (k // 2)
        total += c * weight
    return total


def gaussian_moment_integrate(sym: PhaseSymbol, spec: GaussianSpec) -> complex:
    """Exact ``E[P]`` for a polynomial symbol."""
    if not sym.is_polynomial():
        raise UnsupportedSymbolError(
            "gaussian_moment_integrate: plane waves present, use gaussian_expectation"
        )
    if spec.dimension != sym.nvars:
        raise SpecMismatchError(f"Gaussian dimension {spec.dimension} vs {sym.nvars} variables")
    return gaussian_poly_expectation(sym.polynomial(), spec.variance)


def gaussian_expectation(sym: PhaseSymbol, spec: GaussianSpec) -> complex:
    """``E[F]`` for any symbol: ``E[P e^{ia.Y}] = e^{-h|a|^2/2} E[P(Y + i h a)]``."""
    if spec.dimension != sym.nvars:
        raise SpecMismatchError(f"Gaussian dimension {spec.dimension} vs {sym.nvars} variables")
    total = 0j
    for a, p in sym.terms.items():
        if any(a):
            shifted = poly_shift(p, [1j * spec.variance * x for x in a])
            total += spec.characteristic(a) * gaussian_poly_expectation(shifted, spec.variance)
        else:
            total += gaussian_poly_expectation(p, spec.variance)
    return total


def complex_moment(m: int, k: int, h: float, s: complex = 0j, t: complex = 0j) -> complex:
    """``E[(zeta + s)^m (zetabar + t)^k]`` for ``zeta = y - i eta``, ``y, eta ~ N(0, h)``.

    Only ``E[zeta^r zetabar^r] = r! (2h)^r`` survives the pairing.
    """
    total = 0j
    for r in range(min(m, k) + 1):
        total += (
            math.comb(m, r) * math.comb(k, r) * math.factorial(r) * (2.0 * h) ** r
            * s ** (m - r) * t ** (k - r)
        )
    return total


def phi_moment_table(a: int, b: int, max_degree: int, h: float,
                     s: complex = 0j, t: complex = 0j) -> np.ndarray:
    """One-mode table ``T[alpha, beta] = E[zeta^a zetabar^b Phi_beta conj(Phi_alpha)]``.

    ``s`` and ``t`` shift ``zeta`` and ``zetabar`` (plane-wave factors).
    """
    size = max_degree + 1
    table = np.zeros((size, size), dtype=complex)
    for alpha in range(size):
        for beta in range(size):
            moment = complex_moment(a + beta, b + alpha, h, s, t)
            if moment:
                norm = (2.0 * h) ** ((alpha + beta) / 2.0) * math.sqrt(
                    math.factorial(alpha) * math.factorial(beta)
                )
                table[alpha, beta] = moment / norm
    return table


def phi_gram(spec: TruncationSpec, h: float) -> np.ndarray:
    """``G[alpha, beta] = <Phi_beta, Phi_alpha>_{L^2(mu_h)}`` by exact complex moments."""
    table = phi_moment_table(0, 0, spec.max_degree, h)
    basis = np.array(enumerate_basis(spec), dtype=int)
    gram = np.ones((len(basis), len(basis)), dtype=complex)
    for j in range(spec.modes):
        gram *= table[np.ix_(basis[:, j], basis[:, j])]
    return gram


def segal_hermite_coeffs(f: FockVector, h: float) -> Dict[MultiIndex, complex]:
    """Coefficients of ``T^FW f`` against the orthonormal system ``Phi_alpha``."""
    gram = phi_gram(f.spec, h)
    values = gram @ f.to_array()
    return {
        alpha: complex(values[k])
        for k, alpha in enumerate(enumerate_basis(f.spec))
        if abs(values[k]) > 0
    }


# ----------------------------------------------------------------------------
# Reproducing kernel
# ----------------------------------------------------------------------------
def _kernel_table(zeta_x: complex, h: float, order: int, max_degree: int) -> np.ndarray:
    """``E[exp(zeta_X (y + i eta) / 2h) Phi_k(y, eta)]`` for ``k <= max_degree``, one mode."""
    nodes, weights = gauss_hermite_rule(order)
    y = math.sqrt(h) * nodes[:, None]
    eta = math.sqrt(h) * nodes[None, :]
    w = weights[:, None] * weights[None, :]
    kernel = np.exp(zeta_x * (y + 1j * eta) / (2.0 * h))
    zeta = (y - 1j * eta) / math.sqrt(2.0 * h)
    out = np.zeros(max_degree + 1, dtype=complex)
    power = np.ones_like(zeta)
    for k in range(max_degree + 1):
        out[k] = np.sum(w * kernel * power) / math.sqrt(math.factorial(k))
        power = power * zeta
    return out


def _reproduce(f: FockVector, h: float, x: PhasePoint, order: int) -> complex:
    tables = [
        _kernel_table(complex(x.q[j], -x.p[j]), h, order, f.spec.max_degree)
        for j in range(f.spec.modes)
    ]
    total = 0j
    for alpha, c in f.coeffs.items():
        total += c * np.prod([tables[j][a] for j, a in enumerate(alpha)])
    return complex(total)


def reproducing_apply(f: FockVector, h: float, x: PhasePoint, order: int = 40,
                      tol: float = 1e-10, check: bool = True) -> complex:
    """``int B_h(X, Y) T^FW f(Y) dmu_h(Y)`` by tensor Gauss-Hermite quadrature.

    ``B_h(X, Y) = exp((q - i p).(y + i eta) / 2h)``. The rule is the full
    tensor product; it factorises over modes and over ``(y, eta)``. With
    ``check`` the result at ``2 * order`` must agree to ``tol`` (relative).
    """
    if f.spec.modes > MAX_QUADRATURE_MODES:
        raise QuadratureError(
            f"tensor quadrature limited to {MAX_QUADRATURE_MODES} modes, got {f.spec.modes}"
        )
    if x.modes != f.spec.modes:
        raise SpecMismatchError("reproducing_apply: point and vector mode counts differ")
    value = _reproduce(f, h, x, order)
    if check:
        refined = _reproduce(f, h, x, 2 * order)
        delta = abs(refined - value)
        logger.debug("reproducing_apply: order %d -> %d changes result by %.3e",
                     order, 2 * order, delta)
        if delta > tol * max(1.0, abs(refined)):
            raise QuadratureError(
                f"quadrature order {order} not converged (delta {delta:.3e} > tol {tol:.1e})"
            )
    return value


def reproducing_apply_monte_carlo(f: FockVector, h: float, x: PhasePoint,
                                  samples: int = 20000, seed: int = 0) -> Tuple[complex, float]:
    """Seeded Monte Carlo estimate of the reproducing integral and its standard error."""
    rng = np.random.default_rng(seed)
    n = f.spec.modes
    ys = rng.normal(scale=math.sqrt(h), size=(samples, 2 * n))
    zeta_x = np.array(x.q) - 1j * np.array(x.p)
    kernel = np.exp((ys[:, :n] + 1j * ys[:, n:]) @ zeta_x / (2.0 * h))
    values = kernel * t_fh(f, h).evaluate(ys)
    return complex(values.mean()), float(values.std(ddof=1) / math.sqrt(samples))


# ----------------------------------------------------------------------------
# Hermite split identity
# ----------------------------------------------------------------------------
class SplitResidual(NamedTuple):
    """Residuals of the two readings of the Hermite split identity."""

    corrected: float
    printed: float


@lru_cache(maxsize=None)
def _hermite_e_coeffs(k: int) -> Tuple[int, ...]:
    unit = [0] * k + [1]
    return tuple(int(round(c)) for c in herme2poly(unit))


def _split_projection(m: int, p: int, q: int) -> complex:
    """Exact ``E[(x - iy)^m H_p(x) H_q(y)] / sqrt(m!)``."""
    re, im = 0, 0
    for r in range(m + 1):
        # terme C(m, r) x^r (-i y)^(m-r)
        unit = ((1, 0), (0, -1), (-1, 0), (0, 1))[(m - r) % 4]
        for a, ca in enumerate(_hermite_e_coeffs(p)):
            if ca == 0 or (r + a) % 2:
                continue
            for b, cb in enumerate(_hermite_e_coeffs(q)):
                if cb == 0 or (m - r + b) % 2:
                    continue
                weight = (
                    math.comb(m, r) * ca * cb
                    * _double_factorial(r + a - 1) * _double_factorial(m - r + b - 1)
                )
                re += unit[0] * weight
                im += unit[1] * weight
    scale = math.sqrt(math.factorial(p) * math.factorial(q) * math.factorial(m))
    return complex(re / scale, im / scale)


def hermite_split_identity_check(m: int) -> SplitResidual:
    """Expand ``(x - iy)^m / sqrt(m!)`` on ``H_p(x) H_q(y)`` and compare coefficients.

    ``corrected`` compares with ``sqrt(m!/(p! q!)) (-i)^q`` on ``H_p(x) H_q(y)``,
    ``p + q = m``; ``printed`` puts the same weights on ``H_q(x) H_q(y)``.
    """
    if m < 0:
        raise ValueError(f"hermite_split_identity_check: m must be >= 0, got {m}")
    measured = {
        (p, q): _split_projection(m, p, q) for p in range(m + 1) for q in range(m + 1)
    }
    corrected: Dict[Tuple[int, int], complex] = {}
    printed: Dict[Tuple[int, int], complex] = {}
    for p, q in compositions(m, 2):
        weight = math.sqrt(math.factorial(m) / (math.factorial(p) * math.factorial(q))) * (-1j) ** q
        corrected[(p, q)] = weight
        printed[(q, q)] = printed.get((q, q), 0) + weight
    return SplitResidual(
        corrected=max(abs(v - corrected.get(key, 0)) for key, v in measured.items()),
        printed=max(abs(v - printed.get(key, 0)) for key, v in measured.items()),
    )


# ----------------------------------------------------------------------------
# Stochastic extensions
# ----------------------------------------------------------------------------
Subspace = Union[np.ndarray, Sequence[int]]


def projection_matrix(subspace: Subspace, dimension: int) -> np.ndarray:
    """Orthogonal projector onto a subspace given by orthonormal columns or coordinates."""
    arr = np.asarray(subspace)
    if arr.ndim == 2:
        if arr.shape[0] != dimension:
            raise SpecMismatchError(f"subspace basis has {arr.shape[0]} rows, expected {dimension}")
        if not np.allclose(arr.T @ arr, np.eye(arr.shape[1]), atol=1e-12):
            raise ValueError("subspace basis columns must be orthonormal")
        return arr @ arr.T
    proj = np.zeros((dimension, dimension))
    for k in arr.astype(int).ravel():
        proj[k, k] = 1.0
    return proj


def _l2_norm(poly: Poly, variance: float) -> float:
    conj = {e: np.conj(c) for e, c in poly.items()}
    return math.sqrt(max(0.0, gaussian_poly_expectation(poly_mul(poly, conj), variance).real))


def cylindrical_restriction(poly: Poly, subspace: Subspace, dimension: int) -> Poly:
    """``F o pi_E`` for a polynomial ``F`` on ``R^d``."""
    proj = projection_matrix(subspace, dimension)
    forms = [linear_form(list(proj[i])) for i in range(dimension)]
    return poly_substitute(poly, forms, dimension)


def stochastic_extension_check(sym: PhaseSymbol, subspaces: Sequence[Subspace],
                               spec: GaussianSpec) -> List[float]:
    """Gaps ``||F o pi_{E_{k+1}} - F o pi_{E_k}||_{L^2}`` along nested subspaces.

    ``F`` is a polynomial symbol whose ``2n`` variables are the coordinates of
    ``R^d``, ``d = spec.dimension``.
    """
    if sym.nvars != spec.dimension:
        raise SpecMismatchError(
            f"stochastic_extension_check: {sym.nvars} variables for dimension {spec.dimension}"
        )
    poly = sym.polynomial()
    restricted = [cylindrical_restriction(poly, e, spec.dimension) for e in subspaces]
    return [
        _l2_norm(poly_add(nxt, cur, scale=-1.0), spec.variance)
        for cur, nxt in zip(restricted, restricted[1:])
    ]


def linear_form_norm(freq: Sequence[float], spec: GaussianSpec) -> float:
    """``||x -> a.x||_{L^2(mu_h)}`` by exact integration (``= sqrt(h) |a|``)."""
    if len(freq) != spec.dimension:
        raise SpecMismatchError("linear_form_norm: dimension mismatch")
    return _l2_norm(linear_form(list(freq)), spec.variance)


def restricted_norms(f: FockVector, h: float) -> List[float]:
    """``||T^FH f||`` restricted to the span of the first ``k`` modes, ``k = 1..n``.

    Values are nondecreasing, bounded by ``||f||`` and reach it at ``k = n``.
    """
    n = f.spec.modes
    full = clean(t_fh(f, h).to_symbol().polynomial())
    norms = []
    for k in range(1, n + 1):
        dropped = list(range(k, n)) + list(range(n + k, 2 * n))
        poly = {e: c for e, c in full.items() if not any(e[i] for i in dropped)}
        norms.append(_l2_norm(poly, h))
    return norms
