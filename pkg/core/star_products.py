"""Wick (Mizrahi) and Weyl composition series for phase-space symbols.

On polynomials both series stop at ``k = min(deg F, deg G)``; this is
checked by computing the next term. On constant-coefficient plane waves
each series has an exponential closed form, which is kept alongside the
computed terms.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.stats import qmc

from core.errors import FockCalculusError, UnsupportedSymbolError
from core.multi_index import MultiIndex, compositions, factorial_multi
from core.symbol_algebra import (
    PhaseSymbol,
    QuadraticForm,
    certified_q_norm,
    heat_apply,
    sym_mul,
    sym_partial,
    symplectic_bidiff_power,
)

logger = logging.getLogger(__name__)

# ordre par défaut des séries non polynomiales
DEFAULT_SERIES_ORDER = 8


@dataclass(frozen=True, eq=False)
class StarExpansion:
    """Terms ``C_0..C_K`` of ``sum_k h^k C_k(F, G)``."""

    terms: List[PhaseSymbol]
    h: float
    kind: str
    closed_form: Optional[PhaseSymbol] = None
    exact: bool = False

    @property
    def order(self) -> int:
        """Truncation order ``K``."""
        return len(self.terms) - 1

    def partial_sum(self, upto: int) -> PhaseSymbol:
        """``sum_{k <= upto} h^k C_k``."""
        if upto > self.order:
            raise ValueError(f"partial_sum: only {self.order + 1} terms computed")
        out = PhaseSymbol.zero(self.terms[0].modes)
        for k in range(upto + 1):
            out = out + self.terms[k].scale(self.h ** k)
        return out

    def total(self) -> PhaseSymbol:
        """Closed form when known, otherwise the computed partial sum."""
        if self.closed_form is not None:
            return self.closed_form
        return self.partial_sum(self.order)

    def evaluate(self, points: Any) -> Any:
        """Value of :meth:`total` at a point or rows of points."""
        return self.total().evaluate(points)

    def to_dict(self) -> Dict[str, Any]:
        """Symbol JSON per term, with its index."""
        return {
            "kind": self.kind,
            "h": self.h,
            "order": self.order,
            "exact": self.exact,
            "terms": [dict(index=k, **c.to_dict()) for k, c in enumerate(self.terms)],
            "closed_form": None if self.closed_form is None else self.closed_form.to_dict(),
        }


# ----------------------------------------------------------------------------
# Wick
# ----------------------------------------------------------------------------
def _directional(sym: PhaseSymbol, j: int, sign: float) -> PhaseSymbol:
    """``(d_{q_j} + sign * i d_{p_j}) F``."""
    return sym_partial(sym, "q", j) + sym_partial(sym, "p", j).scale(sign * 1j)


def _directional_powers(sym: PhaseSymbol, sign: float, k: int) -> Dict[MultiIndex, PhaseSymbol]:
    n = sym.modes
    level: Dict[MultiIndex, PhaseSymbol] = {(0,) * n: sym}
    for _ in range(k):
        nxt: Dict[MultiIndex, PhaseSymbol] = {}
        for alpha, value in level.items():
            # on ne dérive que dans les modes >= dernier mode non nul
            last = max((j for j in range(n) if alpha[j]), default=0)
            for j in range(last, n):
                beta = alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:]
                nxt[beta] = _directional(value, j + 1, sign)
        level = nxt
    return level


def c_k_wick(f: PhaseSymbol, g: PhaseSymbol, k: int) -> PhaseSymbol:
    """``2^-k sum_{|a|=k} (1/a!) (d_q - i d_p)^a F (d_q + i d_p)^a G``."""
    if k < 0:
        raise ValueError(f"c_k_wick: k must be >= 0, got {k}")
    if k == 0:
        return sym_mul(f, g)
    left = _directional_powers(f, -1.0, k)
    right = _directional_powers(g, +1.0, k)
    out = PhaseSymbol.zero(f.modes)
    for alpha in compositions(k, f.modes):
        df, dg = left[alpha], right[alpha]
        if df.is_zero() or dg.is_zero():
            continue
        out = out + sym_mul(df, dg).scale(1.0 / factorial_multi(alpha))
    return out.scale(2.0 ** -k)


def _plane_wave_coeffs(sym: PhaseSymbol) -> Optional[List[Tuple[np.ndarray, complex]]]:
    zero = (0,) * sym.nvars
    if sym.is_zero() or any(set(p) != {zero} for p in sym.terms.values()):
        return None
    return [(np.asarray(a), p[zero]) for a, p in sym.terms.items()]


def wick_plane_wave_product(f: PhaseSymbol, g: PhaseSymbol, h: float) -> Optional[PhaseSymbol]:
    """Closed form ``sum c d exp(h u.v / 2) E_{a+b}`` for plane-wave sums (else ``None``).

    ``u = i a_q + a_p`` and ``v = i b_q - b_p``.
    """
    left, right = _plane_wave_coeffs(f), _plane_wave_coeffs(g)
    if left is None or right is None:
        return None
    n = f.modes
    out = PhaseSymbol.zero(n)
    for a, c in left:
        u = 1j * a[:n] + a[n:]
        for b, d in right:
            v = 1j * b[:n] - b[n:]
            factor = c * d * cmath.exp(h * complex(np.dot(u, v)) / 2.0)
            out = out + PhaseSymbol.plane_wave(n, a + b, factor)
    return out


def _series(f: PhaseSymbol, g: PhaseSymbol, h: float, kind: str, c_k, closed,
            order: Optional[int]) -> StarExpansion:
    if f.is_polynomial() and g.is_polynomial():
        top = max(min(f.degree(), g.degree()), 0)
        terms = [c_k(f, g, k) for k in range(top + 1)]
        if not c_k(f, g, top + 1).is_zero():
            raise FockCalculusError(f"{kind} series did not terminate at order {top}")
        closed_form = PhaseSymbol.zero(f.modes)
        for k, term in enumerate(terms):
            closed_form = closed_form + term.scale(h ** k)
        return StarExpansion(terms, h, kind, closed_form, exact=True)
    depth = DEFAULT_SERIES_ORDER if order is None else order
    terms = [c_k(f, g, k) for k in range(depth + 1)]
    closed_form = closed(f, g, h)
    if closed_form is None:
        logger.debug("%s series truncated at order %d (no closed form)", kind, depth)
    return StarExpansion(terms, h, kind, closed_form, exact=closed_form is not None)


def mizrahi_compose(f: PhaseSymbol, g: PhaseSymbol, h: float,
                    order: Optional[int] = None) -> StarExpansion:
    """Wick symbol of ``A B`` from those of ``A`` and ``B``: ``sum_k h^k C_k^wick``."""
    return _series(f, g, h, "wick", c_k_wick, wick_plane_wave_product, order)


# ----------------------------------------------------------------------------
# Weyl
# ----------------------------------------------------------------------------
def c_k_weyl(f: PhaseSymbol, g: PhaseSymbol, k: int) -> PhaseSymbol:
    """``sigma(grad_1, grad_2)^k (F x G)(X, X) / ((2i)^k k!)``."""
    if k < 0:
        raise ValueError(f"c_k_weyl: k must be >= 0, got {k}")
    return symplectic_bidiff_power(f, g, k).scale(1.0 / ((2j) ** k * math.factorial(k)))


def weyl_plane_wave_product(f: PhaseSymbol, g: PhaseSymbol, h: float) -> Optional[PhaseSymbol]:
    """Closed form ``sum c d exp(i h sigma(a, b) / 2) E_{a+b}`` (else ``None``)."""
    left, right = _plane_wave_coeffs(f), _plane_wave_coeffs(g)
    if left is None or right is None:
        return None
    n = f.modes
    out = PhaseSymbol.zero(n)
    for a, c in left:
        for b, d in right:
            sigma = float(np.dot(a[n:], b[:n]) - np.dot(a[:n], b[n:]))
            out = out + PhaseSymbol.plane_wave(n, a + b, c * d * cmath.exp(0.5j * h * sigma))
    return out


def weyl_compose(f: PhaseSymbol, g: PhaseSymbol, h: float,
                 order: Optional[int] = None) -> StarExpansion:
    """Weyl star product ``K_h(F, G) = sum_k h^k C_k^weyl``."""
    return _series(f, g, h, "weyl", c_k_weyl, weyl_plane_wave_product, order)


def c_k_weyl_bound(k: int, form: QuadraticForm, norm_f: float, norm_g: float) -> float:
    """``||F||_Q ||G||_Q (Tr A_Q)^k / (2^k k!)``."""
    if k < 0:
        raise ValueError(f"c_k_weyl_bound: k must be >= 0, got {k}")
    return norm_f * norm_g * form.trace ** k / (2.0 ** k * math.factorial(k))


# ----------------------------------------------------------------------------
# Bounds on a grid
# ----------------------------------------------------------------------------
def sobol_grid(modes: int, points: int = 512, box: float = 2.0, seed: int = 0) -> np.ndarray:
    """Deterministic scrambled Sobol points in ``[-box, box]^{2n}``."""
    sampler = qmc.Sobol(d=2 * modes, scramble=True, seed=seed)
    m = int(round(math.log2(points)))
    raw = sampler.random_base2(m) if 2 ** m == points else sampler.random(points)
    return qmc.scale(raw, [-box] * (2 * modes), [box] * (2 * modes))


def _grid_sup(sym: PhaseSymbol, grid: np.ndarray) -> float:
    return float(np.max(np.abs(sym.evaluate(grid)), initial=0.0))


def weyl_bound_check(f: PhaseSymbol, g: PhaseSymbol, form: QuadraticForm, upto: int,
                     grid: np.ndarray) -> List[Tuple[float, float]]:
    """``(sup_grid |C_k^weyl|, bound_k)`` for ``k <= upto``."""
    norm_f, norm_g = certified_q_norm(f, form), certified_q_norm(g, form)
    return [
        (_grid_sup(c_k_weyl(f, g, k), grid), c_k_weyl_bound(k, form, norm_f, norm_g))
        for k in range(upto + 1)
    ]


def remainder_check(f: PhaseSymbol, g: PhaseSymbol, h: float, upto: int, form: QuadraticForm,
                    grid: Optional[np.ndarray] = None) -> Tuple[float, float]:
    """Grid sup of ``(K - sum_{k<=M} h^k C_k) / h^{M+1}`` and its bound.

    The bound is ``inf`` when the Q-norms cannot be certified.
    """
    if grid is None:
        grid = sobol_grid(f.modes)
    expansion = weyl_compose(f, g, h, order=upto)
    if expansion.closed_form is None:
        raise UnsupportedSymbolError("remainder_check: no closed form for this pair")
    partial = expansion.partial_sum(min(upto, expansion.order))
    remainder = (expansion.closed_form - partial).scale(h ** -(upto + 1))
    try:
        norm_f, norm_g = certified_q_norm(f, form), certified_q_norm(g, form)
    except UnsupportedSymbolError:
        bound = math.inf
    else:
        bound = (
            norm_f * norm_g * form.trace ** (upto + 1) / math.factorial(upto + 1)
            * math.exp(h * form.trace / 2.0)
        )
    return _grid_sup(remainder, grid), bound


def lemma_bridge_check(f: PhaseSymbol, g: PhaseSymbol, h: float) -> float:
    """Coefficient residual of ``Wick(H_{h/2}F, H_{h/2}G) = H_{h/2} Weyl(F, G)``."""
    if not (f.is_polynomial() and g.is_polynomial()):
        raise UnsupportedSymbolError("lemma_bridge_check: polynomial symbols only")
    lhs = mizrahi_compose(heat_apply(f, h / 2.0), heat_apply(g, h / 2.0), h).total()
    rhs = heat_apply(weyl_compose(f, g, h).total(), h / 2.0)
    return lhs.max_coeff_diff(rhs)
