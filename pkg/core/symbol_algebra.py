"""Phase-space symbols: finite sums ``sum_a P_a(X) exp(i a.X)``.

Variables are ordered ``(q_1..q_n, p_1..p_n)``; a symbol stores one sparse
polynomial per frequency vector ``a`` in ``R^{2n}``. The class is closed under
products, derivatives, the heat semigroup and the bidifferential
contractions of both star products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from core.errors import SpecMismatchError, UnsupportedSymbolError
from core.multi_index import compositions, factorial_multi
from core.polynomials import (
    Exponent,
    Poly,
    clean,
    linear_form,
    max_abs_coeff,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_mul,
    poly_partial,
    poly_scale,
    poly_shift,
    poly_substitute,
)
from core.polynomials import max_coeff_diff as poly_max_coeff_diff
from core.validation import validate_symbol_payload

Freq = Tuple[float, ...]
Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class PhaseSymbol:
    """``F(X) = sum_terms P(X) exp(i a.X)`` over ``n`` modes."""

    modes: int
    terms: Dict[Freq, Poly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        nvars = 2 * self.modes
        merged: Dict[Freq, Poly] = {}
        for freq, poly in self.terms.items():
            key = tuple(float(a) + 0.0 for a in freq)
            if len(key) != nvars:
                raise ValueError(f"PhaseSymbol: frequency {freq} is not of length {nvars}")
            for e in poly:
                if len(e) != nvars:
                    raise ValueError(f"PhaseSymbol: exponent {e} is not of length {nvars}")
            merged[key] = poly_add(merged.get(key, {}), poly)
        object.__setattr__(self, "terms", {a: p for a, p in merged.items() if p})

    # -----------------------------
    # CONSTRUCTEURS
    # -----------------------------
    @classmethod
    def zero(cls, modes: int) -> "PhaseSymbol":
        """The zero symbol."""
        return cls(modes)

    @classmethod
    def from_poly(cls, modes: int, poly: Mapping[Exponent, complex]) -> "PhaseSymbol":
        """Pure polynomial symbol."""
        return cls(modes, {(0.0,) * (2 * modes): dict(poly)})

    @classmethod
    def constant(cls, modes: int, value: Scalar) -> "PhaseSymbol":
        """Constant symbol."""
        return cls.from_poly(modes, {(0,) * (2 * modes): complex(value)})

    @classmethod
    def monomial(cls, modes: int, exponents: Sequence[int], coeff: Scalar = 1.0) -> "PhaseSymbol":
        """``coeff * q^e[:n] p^e[n:]``."""
        return cls.from_poly(modes, {tuple(int(e) for e in exponents): complex(coeff)})

    @classmethod
    def q(cls, modes: int, j: int) -> "PhaseSymbol":
        """Coordinate ``q_j`` (``j`` 1-based)."""
        return cls.monomial(modes, _unit(2 * modes, j - 1))

    @classmethod
    def p(cls, modes: int, j: int) -> "PhaseSymbol":
        """Coordinate ``p_j`` (``j`` 1-based)."""
        return cls.monomial(modes, _unit(2 * modes, modes + j - 1))

    @classmethod
    def plane_wave(cls, modes: int, freq: Sequence[float], coeff: Scalar = 1.0) -> "PhaseSymbol":
        """``coeff * exp(i a.X)``."""
        return cls(modes, {tuple(freq): {(0,) * (2 * modes): complex(coeff)}})

    # -----------------------------
    # INSPECTION
    # -----------------------------
    @property
    def nvars(self) -> int:
        """Number of real phase-space variables, ``2n``."""
        return 2 * self.modes

    def is_zero(self) -> bool:
        """True when no term survives."""
        return not self.terms

    def is_polynomial(self) -> bool:
        """True when every term has zero frequency."""
        return all(not any(a) for a in self.terms)

    def polynomial(self) -> Poly:
        """Polynomial part; raises when a plane wave is present."""
        if not self.is_polynomial():
            raise UnsupportedSymbolError("symbol has plane-wave terms")
        return dict(self.terms.get((0.0,) * self.nvars, {}))

    def degree(self) -> int:
        """Largest polynomial degree over all terms (``-1`` for zero)."""
        return max((sum(e) for p in self.terms.values() for e in p), default=-1)

    def frequencies(self) -> Tuple[Freq, ...]:
        """Frequencies present, sorted."""
        return tuple(sorted(self.terms))

    def max_abs_coeff(self) -> float:
        """Largest coefficient modulus."""
        return max((max_abs_coeff(p) for p in self.terms.values()), default=0.0)

    def max_coeff_diff(self, other: "PhaseSymbol") -> float:
        """Largest coefficient difference, frequency by frequency."""
        _same_modes(self, other)
        keys = set(self.terms) | set(other.terms)
        return max(
            (poly_max_coeff_diff(self.terms.get(a, {}), other.terms.get(a, {})) for a in keys),
            default=0.0,
        )

    def conjugate(self) -> "PhaseSymbol":
        """Pointwise complex conjugate."""
        return PhaseSymbol(
            self.modes,
            {
                tuple(-a for a in freq): {e: np.conj(c) for e, c in poly.items()}
                for freq, poly in self.terms.items()
            },
        )

    def is_real(self, tol: float = 1e-12) -> bool:
        """Real-valued everywhere."""
        return self.max_coeff_diff(self.conjugate()) <= tol

    def evaluate(self, points: Any) -> Union[complex, np.ndarray]:
        """Value at one point (length ``2n``) or at the rows of an ``(m, 2n)`` array."""
        pts = np.asarray(points, dtype=float)
        single = pts.ndim == 1
        pts = np.atleast_2d(pts)
        if pts.shape[1] != self.nvars:
            raise SpecMismatchError(f"evaluate: expected {self.nvars} coordinates")
        out = np.zeros(pts.shape[0], dtype=complex)
        for freq, poly in self.terms.items():
            values = poly_eval(poly, pts)
            if any(freq):
                values = values * np.exp(1j * pts @ np.asarray(freq))
            out += values
        return complex(out[0]) if single else out

    # -----------------------------
    # ARITHMETIC
    # -----------------------------
    def __add__(self, other: "PhaseSymbol") -> "PhaseSymbol":
        return sym_add(self, other)

    def __sub__(self, other: "PhaseSymbol") -> "PhaseSymbol":
        return sym_add(self, other.scale(-1.0))

    def __neg__(self) -> "PhaseSymbol":
        return self.scale(-1.0)

    def __mul__(self, other: Union["PhaseSymbol", Scalar]) -> "PhaseSymbol":
        if isinstance(other, PhaseSymbol):
            return sym_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "PhaseSymbol":
        """``factor * F``."""
        return PhaseSymbol(self.modes, {a: poly_scale(p, factor) for a, p in self.terms.items()})

    def __repr__(self) -> str:
        return f"PhaseSymbol(modes={self.modes}, terms={len(self.terms)}, degree={self.degree()})"

    # -----------------------------
    # IMPORT/EXPORT
    # -----------------------------
    def to_dict(self) -> Dict[str, Any]:
        """``{modes, terms: [{freq, poly: [[exponents, re, im], ...]}, ...]}``, sorted."""
        return {
            "modes": self.modes,
            "terms": [
                {
                    "freq": [float(a) for a in freq],
                    "poly": [
                        [[int(x) for x in e], float(c.real), float(c.imag)]
                        for e, c in sorted(self.terms[freq].items())
                    ],
                }
                for freq in self.frequencies()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PhaseSymbol":
        """Inverse of :meth:`to_dict`."""
        if not validate_symbol_payload(data):
            raise ValueError("PhaseSymbol.from_dict: invalid payload")
        modes = int(data["modes"])
        terms: Dict[Freq, Poly] = {}
        for term in data["terms"]:
            freq = tuple(float(a) for a in term["freq"])
            poly = {tuple(e): complex(re, im) for e, re, im in term["poly"]}
            terms[freq] = poly_add(terms.get(freq, {}), poly)
        return cls(modes, terms)


def _unit(nvars: int, k: int) -> Exponent:
    return tuple(1 if i == k else 0 for i in range(nvars))


def _same_modes(f: PhaseSymbol, g: PhaseSymbol) -> None:
    if f.modes != g.modes:
        raise SpecMismatchError(f"symbols have {f.modes} and {g.modes} modes")


# ----------------------------------------------------------------------------
# Algebra
# ----------------------------------------------------------------------------
def sym_add(f: PhaseSymbol, g: PhaseSymbol) -> PhaseSymbol:
    """Pointwise sum."""
    _same_modes(f, g)
    terms = dict(f.terms)
    for a, p in g.terms.items():
        terms[a] = poly_add(terms.get(a, {}), p)
    return PhaseSymbol(f.modes, terms)


def sym_mul(f: PhaseSymbol, g: PhaseSymbol) -> PhaseSymbol:
    """Pointwise product; frequencies add."""
    _same_modes(f, g)
    terms: Dict[Freq, Poly] = {}
    for a, p in f.terms.items():
        for b, r in g.terms.items():
            freq = tuple(x + y for x, y in zip(a, b))
            terms[freq] = poly_add(terms.get(freq, {}), poly_mul(p, r))
    return PhaseSymbol(f.modes, terms)


# ----------------------------------------------------------------------------
# Differential calculus
# ----------------------------------------------------------------------------
def _partial_var(f: PhaseSymbol, k: int) -> PhaseSymbol:
    terms = {}
    for a, p in f.terms.items():
        terms[a] = poly_add(poly_partial(p, k), p, scale=1j * a[k])
    return PhaseSymbol(f.modes, terms)


def variable_index(modes: int, kind: str, j: int) -> int:
    """Position of ``q_j`` or ``p_j`` (``j`` 1-based) in the variable order."""
    if kind not in ("q", "p"):
        raise ValueError(f"variable kind must be 'q' or 'p', got {kind!r}")
    if not 1 <= j <= modes:
        raise ValueError(f"variable index {j} outside 1..{modes}")
    return j - 1 if kind == "q" else modes + j - 1


def sym_partial(f: PhaseSymbol, kind: str, j: int) -> PhaseSymbol:
    """``d/dq_j`` or ``d/dp_j`` by the product rule."""
    return _partial_var(f, variable_index(f.modes, kind, j))


def sym_derivative(f: PhaseSymbol, orders: Sequence[int]) -> PhaseSymbol:
    """Mixed partial with ``orders[k]`` derivatives in variable ``k``."""
    if len(orders) != f.nvars:
        raise ValueError(f"sym_derivative: expected {f.nvars} orders")
    if not any(orders):
        return f
    if f.is_polynomial():
        return PhaseSymbol.from_poly(f.modes, poly_derivative(f.polynomial(), orders))
    out = f
    for k, o in enumerate(orders):
        for _ in range(o):
            out = _partial_var(out, k)
    return out


def sym_laplacian(f: PhaseSymbol) -> PhaseSymbol:
    """Sum of the second partials over all ``2n`` variables."""
    out = PhaseSymbol.zero(f.modes)
    for k in range(f.nvars):
        out = out + _partial_var(_partial_var(f, k), k)
    return out


def _poly_laplacian(p: Poly, nvars: int) -> Poly:
    out: Poly = {}
    for k in range(nvars):
        out = poly_add(out, poly_partial(poly_partial(p, k), k))
    return out


def _poly_heat(p: Poly, variance: float, nvars: int) -> Poly:
    out: Poly = {}
    term = dict(p)
    k = 0
    while term:
        out = poly_add(out, term, scale=(variance / 2.0) ** k / math.factorial(k))
        term = _poly_laplacian(term, nvars)
        k += 1
    return out


def heat_apply(f: PhaseSymbol, variance: float) -> PhaseSymbol:
    """Gaussian smoothing ``sum_k (v/2)^k / k! Laplacian^k F`` of variance ``v``.

    On a plane-wave term the series sums to
    ``exp(-v|a|^2/2) exp(i a.X) [H_v P](X + i v a)``.
    """
    if variance < 0:
        raise ValueError(f"heat_apply: variance must be >= 0, got {variance!r}")
    if variance == 0:
        return f
    terms: Dict[Freq, Poly] = {}
    for a, p in f.terms.items():
        smooth = _poly_heat(p, variance, f.nvars)
        if any(a):
            damping = math.exp(-variance * float(np.dot(a, a)) / 2.0)
            smooth = poly_scale(poly_shift(smooth, [1j * variance * x for x in a]), damping)
        terms[a] = smooth
    return PhaseSymbol(f.modes, terms)


def sym_shift(f: PhaseSymbol, shift: Sequence[complex]) -> PhaseSymbol:
    """``X -> F(X + c)`` for a complex vector ``c``."""
    if len(shift) != f.nvars:
        raise ValueError(f"sym_shift: expected {f.nvars} components")
    terms = {}
    for a, p in f.terms.items():
        phase = np.exp(1j * complex(np.dot(a, shift)))
        terms[a] = poly_scale(poly_shift(p, shift), phase)
    return PhaseSymbol(f.modes, terms)


def sym_linear_change(f: PhaseSymbol, matrix: np.ndarray) -> PhaseSymbol:
    """``X -> F(M X)`` for a real ``2n x 2n`` matrix ``M``."""
    m = np.asarray(matrix, dtype=float)
    if m.shape != (f.nvars, f.nvars):
        raise ValueError(f"sym_linear_change: expected a {f.nvars}x{f.nvars} matrix")
    forms = [linear_form(list(m[k])) for k in range(f.nvars)]
    terms: Dict[Freq, Poly] = {}
    for a, p in f.terms.items():
        freq = tuple(m.T @ np.asarray(a))
        terms[freq] = poly_add(terms.get(freq, {}), poly_substitute(p, forms, f.nvars))
    return PhaseSymbol(f.modes, terms)


def to_complex_coordinates(f: PhaseSymbol) -> Poly:
    """Polynomial ``F`` rewritten in ``(zeta_1..zeta_n, zetabar_1..zetabar_n)``.

    ``zeta = q - i p``, so ``q = (zeta + zetabar)/2`` and ``p = i (zeta - zetabar)/2``.
    """
    n = f.modes
    forms = []
    for j in range(n):
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = 0.5, 0.5
        forms.append(linear_form(coeffs))
    for j in range(n):
        coeffs = [0j] * (2 * n)
        coeffs[j], coeffs[n + j] = 0.5j, -0.5j
        forms.append(linear_form(coeffs))
    return poly_substitute(f.polynomial(), forms, 2 * n)


# ----------------------------------------------------------------------------
# Symplectic contractions
# ----------------------------------------------------------------------------
def symplectic_bidiff_power(f: PhaseSymbol, g: PhaseSymbol, k: int) -> PhaseSymbol:
    """``sigma(grad_1, grad_2)^k (F x G)`` restricted to the diagonal.

    ``sigma(grad_1, grad_2) = sum_j d_{p_j}^(1) d_{q_j}^(2) - d_{q_j}^(1) d_{p_j}^(2)``;
    the k-th power is expanded multinomially over these ``2n`` commuting terms.
    """
    _same_modes(f, g)
    if k < 0:
        raise ValueError(f"symplectic_bidiff_power: k must be >= 0, got {k}")
    n = f.modes
    cache_f: Dict[Tuple[int, ...], PhaseSymbol] = {}
    cache_g: Dict[Tuple[int, ...], PhaseSymbol] = {}
    out = PhaseSymbol.zero(n)
    for gamma in compositions(k, 2 * n):
        plus, minus = gamma[:n], gamma[n:]
        orders_f = minus + plus
        orders_g = plus + minus
        if orders_f not in cache_f:
            cache_f[orders_f] = sym_derivative(f, orders_f)
        if orders_g not in cache_g:
            cache_g[orders_g] = sym_derivative(g, orders_g)
        df, dg = cache_f[orders_f], cache_g[orders_g]
        if df.is_zero() or dg.is_zero():
            continue
        coeff = math.factorial(k) / factorial_multi(gamma) * (-1) ** sum(minus)
        out = out + sym_mul(df, dg).scale(coeff)
    return out


def poisson_bracket(f: PhaseSymbol, g: PhaseSymbol) -> PhaseSymbol:
    """``{F, G} = -sigma(dF, dG)``, so that ``{q_j, p_j} = 1``."""
    return symplectic_bidiff_power(f, g, 1).scale(-1.0)


# ----------------------------------------------------------------------------
# Quadratic forms
# ----------------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class QuadraticForm:
    """``Q(X) = (A X).X`` with ``A`` symmetric positive semi-definite."""

    matrix: np.ndarray
    tol: float = 1e-12

    def __post_init__(self) -> None:
        arr = np.array(self.matrix, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"QuadraticForm: matrix must be square, got {arr.shape}")
        scale = max(1.0, float(np.max(np.abs(arr), initial=0.0)))
        if np.max(np.abs(arr - arr.T), initial=0.0) > self.tol * scale:
            raise ValueError("QuadraticForm: matrix is not symmetric")
        if arr.size and np.linalg.eigvalsh(arr).min() < -self.tol * scale:
            raise ValueError("QuadraticForm: matrix is not positive semi-definite")
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @classmethod
    def identity(cls, modes: int, scale: float = 1.0) -> "QuadraticForm":
        """``scale * |X|^2``."""
        return cls(scale * np.eye(2 * modes))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "QuadraticForm":
        """Diagonal form."""
        return cls(np.diag(np.asarray(values, dtype=float)))

    @classmethod
    def rank_one(cls, freq: Sequence[float]) -> "QuadraticForm":
        """``Q(X) = (a.X)^2``."""
        a = np.asarray(freq, dtype=float)
        return cls(np.outer(a, a))

    @property
    def dimension(self) -> int:
        """Phase-space dimension ``2n``."""
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        """``Tr A_Q``."""
        return float(np.trace(self.matrix))

    def __call__(self, x: Sequence[float]) -> float:
        v = np.asarray(x, dtype=float)
        return float(v @ self.matrix @ v)


def q_seminorm_dominates(freq: Sequence[float], form: QuadraticForm) -> bool:
    """True iff ``(a.U)^2 <= Q(U)`` for every ``U``, i.e. ``A_Q - a a^T`` is PSD."""
    a = np.asarray(freq, dtype=float)
    if a.shape != (form.dimension,):
        raise SpecMismatchError("q_seminorm_dominates: frequency and form dimensions differ")
    if not a.any():
        return True
    residual = form.matrix - np.outer(a, a)
    scale = max(1.0, float(np.max(np.abs(form.matrix), initial=0.0)))
    return bool(np.linalg.eigvalsh(residual).min() >= -form.tol * scale)


def certified_q_norm(f: PhaseSymbol, form: QuadraticForm) -> float:
    """Upper bound ``sum |c_a|`` on ``||F||_Q`` for a sum of dominated plane waves."""
    total = 0.0
    for a, p in f.terms.items():
        if set(p) != {(0,) * f.nvars}:
            raise UnsupportedSymbolError("certified_q_norm: only constant-coefficient plane waves")
        if not q_seminorm_dominates(a, form):
            raise UnsupportedSymbolError(f"certified_q_norm: frequency {a} is not dominated by Q")
        total += abs(p[(0,) * f.nvars])
    return total


def clean_symbol(f: PhaseSymbol, tol: float) -> PhaseSymbol:
    """Drop coefficients of modulus ``<= tol``."""
    return PhaseSymbol(f.modes, {a: clean(p, tol) for a, p in f.terms.items()})
