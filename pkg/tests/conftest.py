"""Configuration for pytest."""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

# pylint: disable=wrong-import-position
from core.fock_space import FockVector  # noqa: E402
from core.multi_index import TruncationSpec  # noqa: E402
from core.symbol_algebra import PhaseSymbol  # noqa: E402


@pytest.fixture
def rng():
    """Seeded generator, fresh for every test."""
    return np.random.default_rng(20240611)


@pytest.fixture
def small_spec():
    """Two modes, degree 6."""
    return TruncationSpec(2, 6)


@pytest.fixture
def one_mode_spec():
    """One mode, degree 8."""
    return TruncationSpec(1, 8)


@st.composite
def multi_indices(draw, modes: int, max_degree: int):
    """Strategy for multi-indices of ``modes`` entries with ``|alpha| <= max_degree``."""
    budget = draw(st.integers(min_value=0, max_value=max_degree))
    alpha = []
    for _ in range(modes):
        a = draw(st.integers(min_value=0, max_value=budget))
        alpha.append(a)
        budget -= a
    return tuple(alpha)


def gaussian_complex():
    """Bounded complex coefficients."""
    part = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
    return st.builds(complex, part, part)


def polynomials(nvars: int, max_degree: int, max_terms: int = 5):
    """Strategy for sparse complex polynomials."""
    return st.dictionaries(
        multi_indices(nvars, max_degree), gaussian_complex(), min_size=1, max_size=max_terms
    )


def symbols(modes: int, max_degree: int, max_terms: int = 5):
    """Strategy for polynomial phase-space symbols."""
    return polynomials(2 * modes, max_degree, max_terms).map(
        lambda p: PhaseSymbol.from_poly(modes, p)
    )



def fock_vectors(spec: TruncationSpec, max_degree: int, max_terms: int = 5):
    """Strategy for sparse vectors of ``spec`` supported on ``|alpha| <= max_degree``."""
    return st.dictionaries(
        multi_indices(spec.modes, max_degree), gaussian_complex(), min_size=1, max_size=max_terms
    ).map(lambda c: FockVector(spec, c))
