"""Tests for the Wick and Weyl composition series."""

import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import symbols
from core.errors import UnsupportedSymbolError
from core.fock_space import PhasePoint
from core.multi_index import TruncationSpec
from core.quantization import weyl_op, wick_symbol_eval, wick_to_operator
from core.star_products import (
    DEFAULT_SERIES_ORDER,
    c_k_weyl,
    c_k_wick,
    lemma_bridge_check,
    mizrahi_compose,
    remainder_check,
    sobol_grid,
    weyl_bound_check,
    weyl_compose,
)
from core.symbol_algebra import PhaseSymbol, QuadraticForm, poisson_bracket, sym_linear_change

Q1 = PhaseSymbol.q(1, 1)
P1 = PhaseSymbol.p(1, 1)


def test_wick_series_terminates_on_coordinates():
    """``q * q = q^2 + h/2`` in the Wick calculus."""
    exp = mizrahi_compose(Q1, Q1, 0.3)
    assert exp.exact
    assert exp.order == 1
    assert exp.terms[1].max_coeff_diff(PhaseSymbol.constant(1, 0.5)) == 0.0
    expected = PhaseSymbol.from_poly(1, {(2, 0): 1.0, (0, 0): 0.15})
    assert exp.total().max_coeff_diff(expected) < 1e-15


def test_weyl_first_term():
    """``C_1^weyl(q, p) = i/2``."""
    assert c_k_weyl(Q1, P1, 1).max_coeff_diff(PhaseSymbol.constant(1, 0.5j)) < 1e-15
    with pytest.raises(ValueError):
        c_k_weyl(Q1, P1, -1)
    with pytest.raises(ValueError):
        c_k_wick(Q1, P1, -1)


@settings(max_examples=40, deadline=None)
@given(symbols(1, 3), symbols(1, 3))
def test_first_order_commutator_is_poisson(f, g):
    """``C_1(F, G) - C_1(G, F) = i {F, G}`` for both calculi."""
    bracket = poisson_bracket(f, g).scale(1j)
    for c_k in (c_k_wick, c_k_weyl):
        diff = c_k(f, g, 1) - c_k(g, f, 1)
        assert diff.max_coeff_diff(bracket) <= 1e-9


def test_mizrahi_matches_operator_product():
    """Wick symbol of ``Op(F) Op(G)`` is the composed series."""
    h = 1.0
    spec = TruncationSpec(1, 30)
    f = PhaseSymbol.from_poly(1, {(2, 0): 1.0, (0, 1): -0.5j})
    g = PhaseSymbol.from_poly(1, {(1, 1): 2.0, (0, 0): 1.0})
    product = wick_to_operator(f, h, spec) @ wick_to_operator(g, h, spec)
    exp = mizrahi_compose(f, g, h)
    for x in (PhasePoint((0.2,), (0.1,)), PhasePoint((-0.3,), (0.4,))):
        value, _ = wick_symbol_eval(product, h, x)
        assert value == pytest.approx(exp.evaluate(x.vector()), abs=1e-9)


def test_weyl_matches_operator_product():
    """``Op^W(F) Op^W(G) = Op^W(F #_h G)`` on the safe block."""
    h = 0.5
    spec = TruncationSpec(1, 10)
    f, g = Q1 * Q1, P1 * P1
    lhs = weyl_op(f, h, spec) @ weyl_op(g, h, spec)
    rhs = weyl_op(weyl_compose(f, g, h).total(), h, spec)
    assert lhs.max_abs_diff(rhs, max_degree=8) < 1e-12


def test_weyl_is_rotation_covariant():
    """Composing then rotating equals rotating then composing."""
    c, s = math.cos(0.7), math.sin(0.7)
    rot = np.array([[c, -s], [s, c]])
    f = PhaseSymbol.from_poly(1, {(2, 1): 1.0, (0, 1): 0.5})
    g = PhaseSymbol.from_poly(1, {(1, 1): -1.0, (1, 0): 2.0})
    lhs = weyl_compose(sym_linear_change(f, rot), sym_linear_change(g, rot), 0.4).total()
    rhs = sym_linear_change(weyl_compose(f, g, 0.4).total(), rot)
    assert lhs.max_coeff_diff(rhs) < 1e-12


@pytest.mark.parametrize("compose", [mizrahi_compose, weyl_compose])
def test_plane_wave_closed_form_matches_series(compose):
    """Partial sums converge to the exponential closed form."""
    f = PhaseSymbol.plane_wave(1, (0.5, -0.3), 1.0 + 0.5j)
    g = PhaseSymbol.plane_wave(1, (-0.2, 0.4), 2.0)
    exp = compose(f, g, 0.8, order=20)
    assert exp.exact
    assert exp.order == 20
    pts = sobol_grid(1, points=64)
    assert np.allclose(exp.partial_sum(20).evaluate(pts), exp.evaluate(pts), atol=1e-14)
    with pytest.raises(ValueError):
        exp.partial_sum(21)


def test_series_without_closed_form(caplog):
    """Mixed symbols keep the computed terms and say so."""
    f = Q1 * PhaseSymbol.plane_wave(1, (1.0, 0.0))
    with caplog.at_level(logging.DEBUG, logger="core.star_products"):
        exp = weyl_compose(f, P1, 1.0)
    assert exp.order == DEFAULT_SERIES_ORDER
    assert not exp.exact
    assert exp.closed_form is None
    assert "no closed form" in caplog.text
    data = exp.to_dict()
    assert data["kind"] == "weyl"
    assert [t["index"] for t in data["terms"]] == list(range(DEFAULT_SERIES_ORDER + 1))


def test_lemma_bridge_polynomials():
    """Heat-smoothed Wick composition equals smoothed Weyl composition."""
    f = PhaseSymbol.from_poly(1, {(2, 1): 1.0, (0, 0): 0.5})
    g = PhaseSymbol.from_poly(1, {(1, 1): 1j, (0, 2): -1.0})
    assert lemma_bridge_check(f, g, 0.7) < 1e-12
    with pytest.raises(UnsupportedSymbolError):
        lemma_bridge_check(PhaseSymbol.plane_wave(1, (1.0, 0.0)), g, 0.7)


def test_weyl_term_bounds():
    """``sup |C_k| <= ||F||_Q ||G||_Q (Tr A_Q)^k / (2^k k!)``."""
    form = QuadraticForm.identity(1)
    f = PhaseSymbol.plane_wave(1, (0.6, 0.0), 1.5)
    g = PhaseSymbol.plane_wave(1, (0.0, 0.8), -1.0)
    for sup, bound in weyl_bound_check(f, g, form, 6, sobol_grid(1)):
        assert sup <= bound + 1e-12


@pytest.mark.parametrize("upto", [0, 1, 2, 3])
def test_remainder_bound(upto):
    """Scaled remainder stays under its bound."""
    form = QuadraticForm.identity(1)
    f = PhaseSymbol.plane_wave(1, (0.6, 0.0)) + PhaseSymbol.plane_wave(1, (0.0, -0.5), 0.5)
    g = PhaseSymbol.plane_wave(1, (0.0, 0.8), 2.0)
    sup, bound = remainder_check(f, g, 0.5, upto, form)
    assert math.isfinite(bound)
    assert sup <= bound


def test_remainder_bound_limits():
    """Polynomials get no finite bound; mixed symbols are unsupported."""
    form = QuadraticForm.identity(1)
    _, bound = remainder_check(Q1, P1, 0.5, 1, form)
    assert bound == math.inf
    with pytest.raises(UnsupportedSymbolError):
        remainder_check(Q1 * PhaseSymbol.plane_wave(1, (1.0, 0.0)), P1, 0.5, 1, form)


def test_sobol_grid_is_deterministic():
    """Same seed, same points, inside the box."""
    grid = sobol_grid(2, points=128, box=1.5, seed=3)
    assert grid.shape == (128, 4)
    assert np.all(np.abs(grid) <= 1.5)
    assert np.array_equal(grid, sobol_grid(2, points=128, box=1.5, seed=3))


def test_wick_terms_are_basis_independent():
    """``C_k^wick`` commutes with a rotation acting alike on ``q`` and ``p``."""
    c, s = math.cos(1.1), math.sin(1.1)
    rot = np.array([[c, -s], [s, c]])
    block = np.zeros((4, 4))
    block[:2, :2] = rot
    block[2:, 2:] = rot
    f = PhaseSymbol.from_poly(2, {(2, 0, 1, 0): 1.0, (0, 1, 0, 1): 0.5j, (1, 0, 0, 0): -2.0})
    g = PhaseSymbol.from_poly(2, {(1, 1, 0, 0): 1.5, (0, 0, 2, 1): -1.0, (0, 0, 0, 0): 0.3})
    for k in range(4):
        lhs = c_k_wick(sym_linear_change(f, block), sym_linear_change(g, block), k)
        rhs = sym_linear_change(c_k_wick(f, g, k), block)
        assert lhs.max_coeff_diff(rhs) < 1e-12


def test_mizrahi_is_associative():
    """Both bracketings of a triple product give the operator's Wick symbol."""
    h = 0.7
    spec = TruncationSpec(1, 30)
    f = PhaseSymbol.from_poly(1, {(1, 0): 1.0, (0, 2): 0.5j})
    g = PhaseSymbol.from_poly(1, {(1, 1): -1.0, (0, 0): 2.0})
    k = PhaseSymbol.from_poly(1, {(2, 0): 0.25, (0, 1): 1.0 - 1.0j})
    left = mizrahi_compose(mizrahi_compose(f, g, h).total(), k, h).total()
    right = mizrahi_compose(f, mizrahi_compose(g, k, h).total(), h).total()
    assert left.max_coeff_diff(right) < 1e-12
    product = (wick_to_operator(f, h, spec) @ wick_to_operator(g, h, spec)) @ wick_to_operator(k, h, spec)
    for x in (PhasePoint((0.2,), (-0.1,)), PhasePoint((-0.3,), (0.25,))):
        value, _ = wick_symbol_eval(product, h, x)
        assert value == pytest.approx(left.evaluate(x.vector()), abs=1e-8)
