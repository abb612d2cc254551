"""Multi-index arithmetic and the degree-graded Fock basis.

A multi-index is a plain tuple of non-negative integers, one entry per mode.
The truncated basis ``{u_alpha : |alpha| <= N}`` is enumerated degree by
degree; inside one degree the first entry decreases, so for two modes and
``N = 1`` the order is ``(0, 0), (1, 0), (0, 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from scipy.special import gammaln

MultiIndex = Tuple[int, ...]

# au-delà de ce degré total, on passe en log-gamma
EXACT_DEGREE_LIMIT = 40


@dataclass(frozen=True)
class TruncationSpec:
    """Finite truncation: ``modes`` modes, total degree at most ``max_degree``."""

    modes: int
    max_degree: int

    def __post_init__(self) -> None:
        if int(self.modes) != self.modes or self.modes < 1:
            raise ValueError(f"modes must be a positive integer, got {self.modes!r}")
        if int(self.max_degree) != self.max_degree or self.max_degree < 0:
            raise ValueError(
                f"max_degree must be a non-negative integer, got {self.max_degree!r}"
            )

    @property
    def basis_size(self) -> int:
        """Number of basis vectors, ``binomial(n + N, n)``."""
        return math.comb(self.modes + self.max_degree, self.modes)

    def with_degree(self, max_degree: int) -> "TruncationSpec":
        """Same mode count, another maximal degree."""
        return TruncationSpec(self.modes, max_degree)

    def contains(self, alpha: Sequence[int]) -> bool:
        """True when ``alpha`` is a valid key of this truncation."""
        return (
            len(alpha) == self.modes
            and all(a >= 0 for a in alpha)
            and sum(alpha) <= self.max_degree
        )


def degree(alpha: Sequence[int]) -> int:
    """Total degree ``|alpha|``."""
    return sum(alpha)


def unit(modes: int, j: int) -> MultiIndex:
    """Multi-index ``e_j`` (``j`` is 0-based here)."""
    return tuple(1 if k == j else 0 for k in range(modes))


def add(alpha: Sequence[int], beta: Sequence[int]) -> MultiIndex:
    """Entrywise sum."""
    return tuple(a + b for a, b in zip(alpha, beta))


def compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    """All multi-indices of length ``parts`` and degree ``total``.

    The first entry runs from ``total`` down to 0.
    """
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _basis(modes: int, max_degree: int) -> Tuple[MultiIndex, ...]:
    return tuple(
        alpha for d in range(max_degree + 1) for alpha in compositions(d, modes)
    )


def enumerate_basis(spec: TruncationSpec) -> List[MultiIndex]:
    """All ``alpha`` with ``|alpha| <= N`` in graded order."""
    return list(_basis(spec.modes, spec.max_degree))


@lru_cache(maxsize=None)
def _index_map(modes: int, max_degree: int) -> Dict[MultiIndex, int]:
    return {alpha: pos for pos, alpha in enumerate(_basis(modes, max_degree))}


def basis_index(spec: TruncationSpec) -> Dict[MultiIndex, int]:
    """Position of every multi-index in :func:`enumerate_basis` (shared, do not mutate)."""
    return _index_map(spec.modes, spec.max_degree)


def factorial_multi(alpha: Sequence[int]) -> int:
    """Exact ``alpha! = prod_j alpha_j!``."""
    result = 1
    for a in alpha:
        result *= math.factorial(a)
    return result


def log_factorial_multi(alpha: Sequence[int]) -> float:
    """``log(alpha!)`` through log-gamma."""
    return float(sum(gammaln(a + 1.0) for a in alpha))


def log_merge_weight(alpha: Sequence[int], beta: Sequence[int]) -> float:
    """Log-space ``log sqrt((alpha+beta)! / (alpha! beta!))``."""
    return 0.5 * (
        log_factorial_multi(add(alpha, beta))
        - log_factorial_multi(alpha)
        - log_factorial_multi(beta)
    )


def merge_weight(alpha: Sequence[int], beta: Sequence[int]) -> float:
    """``sqrt((alpha+beta)! / (alpha! beta!))``.

    Exact integers up to total degree :data:`EXACT_DEGREE_LIMIT`, log-gamma above.
    """
    if len(alpha) != len(beta):
        raise ValueError("merge_weight: multi-indices have different mode counts")
    if degree(alpha) + degree(beta) <= EXACT_DEGREE_LIMIT:
        num = factorial_multi(add(alpha, beta))
        den = factorial_multi(alpha) * factorial_multi(beta)
        return math.sqrt(num / den)
    return math.exp(log_merge_weight(alpha, beta))


def raising_weight(base: Sequence[int], step: Sequence[int]) -> float:
    """``sqrt((base+step)! / base!)``: matrix element of ``a*^step`` on ``u_base``."""
    top = add(base, step)
    if degree(top) <= EXACT_DEGREE_LIMIT:
        return math.sqrt(factorial_multi(top) / factorial_multi(base))
    return math.exp(0.5 * (log_factorial_multi(top) - log_factorial_multi(base)))
