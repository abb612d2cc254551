"""Sparse multivariate polynomials with complex coefficients.

A polynomial is a ``dict`` mapping an exponent tuple to its coefficient. The
helpers here never mutate their arguments.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Sequence, Tuple

import numpy as np

Exponent = Tuple[int, ...]
Poly = Dict[Exponent, complex]


def clean(poly: Mapping[Exponent, complex], tol: float = 0.0) -> Poly:
    """Copy of ``poly`` without coefficients of modulus ``<= tol``."""
    return {e: complex(c) for e, c in poly.items() if abs(c) > tol}


def constant(nvars: int, value: complex) -> Poly:
    """Constant polynomial."""
    return clean({(0,) * nvars: complex(value)})


def variable(nvars: int, k: int) -> Poly:
    """The coordinate ``x_k`` (0-based)."""
    return {tuple(1 if i == k else 0 for i in range(nvars)): 1.0 + 0j}


def linear_form(coeffs: Sequence[complex], const: complex = 0.0) -> Poly:
    """``const + sum_k coeffs[k] x_k``."""
    nvars = len(coeffs)
    out = constant(nvars, const)
    for k, c in enumerate(coeffs):
        if c != 0:
            out[tuple(1 if i == k else 0 for i in range(nvars))] = complex(c)
    return out


def degree(poly: Mapping[Exponent, complex]) -> int:
    """Total degree, ``-1`` for the zero polynomial."""
    return max((sum(e) for e in poly), default=-1)


def poly_add(p: Mapping[Exponent, complex], q: Mapping[Exponent, complex],
             scale: complex = 1.0) -> Poly:
    """``p + scale * q``."""
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + scale * c
    return clean(out)


def poly_scale(p: Mapping[Exponent, complex], factor: complex) -> Poly:
    """``factor * p``."""
    if factor == 0:
        return {}
    return clean({e: factor * c for e, c in p.items()})


def poly_mul(p: Mapping[Exponent, complex], q: Mapping[Exponent, complex]) -> Poly:
    """Product of two polynomials."""
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return clean(out)


def poly_pow(p: Mapping[Exponent, complex], k: int, nvars: int) -> Poly:
    """``p ** k`` by repeated squaring."""
    result = constant(nvars, 1.0)
    base = dict(p)
    while k > 0:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_partial(p: Mapping[Exponent, complex], k: int) -> Poly:
    """Partial derivative with respect to ``x_k``."""
    out: Poly = {}
    for e, c in p.items():
        if e[k] == 0:
            continue
        e2 = e[:k] + (e[k] - 1,) + e[k + 1:]
        out[e2] = out.get(e2, 0) + c * e[k]
    return clean(out)


def poly_derivative(p: Mapping[Exponent, complex], orders: Sequence[int]) -> Poly:
    """Mixed partial ``d^orders p``."""
    out: Poly = {}
    for e, c in p.items():
        if any(o > a for o, a in zip(orders, e)):
            continue
        coeff = complex(c)
        for o, a in zip(orders, e):
            for r in range(o):
                coeff *= a - r
        e2 = tuple(a - o for a, o in zip(e, orders))
        out[e2] = out.get(e2, 0) + coeff
    return clean(out)


def poly_substitute(p: Mapping[Exponent, complex], forms: Sequence[Mapping[Exponent, complex]],
                    nvars: int) -> Poly:
    """Replace variable ``x_k`` by the polynomial ``forms[k]`` (over ``nvars`` variables)."""
    powers: Dict[Tuple[int, int], Poly] = {}

    def power(k: int, m: int) -> Poly:
        if (k, m) not in powers:
            powers[(k, m)] = (
                constant(nvars, 1.0) if m == 0 else poly_mul(power(k, m - 1), forms[k])
            )
        return powers[(k, m)]

    out: Poly = {}
    for e, c in p.items():
        term = constant(nvars, c)
        for k, m in enumerate(e):
            if m:
                term = poly_mul(term, power(k, m))
        for e2, c2 in term.items():
            out[e2] = out.get(e2, 0) + c2
    return clean(out)


def poly_shift(p: Mapping[Exponent, complex], shift: Sequence[complex]) -> Poly:
    """``x -> p(x + shift)`` for a complex shift vector."""
    nvars = len(shift)
    forms = [linear_form([1.0 if i == k else 0.0 for i in range(nvars)], shift[k])
             for k in range(nvars)]
    return poly_substitute(p, forms, nvars)


def poly_eval(p: Mapping[Exponent, complex], points: np.ndarray) -> np.ndarray:
    """Evaluate at the rows of ``points`` (shape ``(m, nvars)``)."""
    pts = np.atleast_2d(np.asarray(points, dtype=complex))
    out = np.zeros(pts.shape[0], dtype=complex)
    for e, c in p.items():
        out += c * np.prod(pts ** np.asarray(e), axis=1)
    return out


def max_coeff_diff(p: Mapping[Exponent, complex], q: Mapping[Exponent, complex]) -> float:
    """Largest coefficient difference over the union of supports."""
    keys: Iterable[Exponent] = set(p) | set(q)
    return max((abs(p.get(e, 0) - q.get(e, 0)) for e in keys), default=0.0)


def max_abs_coeff(p: Mapping[Exponent, complex]) -> float:
    """Largest coefficient modulus."""
    return max((abs(c) for c in p.values()), default=0.0)
