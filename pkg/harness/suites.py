"""Registry of verification suites.

Each suite turns a :class:`SuiteConfig` into a list of :class:`CaseRecord`.
Randomness comes from :func:`case_rng`, seeded by ``(seed, suite, index)``,
so results do not depend on the order in which suites or cases run.
"""

from __future__ import annotations

import logging
import math
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

import numpy as np

from core.bargmann import (
    GaussianSpec,
    creation_multiplier,
    hermite_split_identity_check,
    linear_form_norm,
    reproducing_apply,
    restricted_norms,
    stochastic_extension_check,
    t_fh,
    t_fh_eval,
)
from core.fock_space import (
    FockVector,
    PhasePoint,
    annihilate_along,
    coherent_product_check,
    coherent_product_trail,
    compose_I,
    create_along,
    decays,
    weighted_norm,
)
from core.multi_index import TruncationSpec, enumerate_basis
from core.polynomials import Poly, linear_form, max_abs_coeff, poly_substitute
from core.quantization import (
    LadderPolynomial,
    anti_wick_op,
    displacement_covariance_check,
    ladder_to_matrix,
    matrix_wick_symbol,
    normal_symbol,
    t_j_equality_check,
    weyl_op,
    wick_symbol_eval,
    wick_to_operator,
)
from core.star_products import (
    lemma_bridge_check,
    mizrahi_compose,
    remainder_check,
    sobol_grid,
    weyl_bound_check,
    weyl_compose,
)
from core.symbol_algebra import PhaseSymbol, QuadraticForm, heat_apply
from harness.config import SuiteConfig
from harness.report import CaseRecord, digest

logger = logging.getLogger(__name__)

SuiteFn = Callable[[SuiteConfig], List[CaseRecord]]


@dataclass(frozen=True)
class Suite:
    """A named check with the statement it verifies."""

    name: str
    statement: str
    run: SuiteFn
    overrides: Mapping[str, Any] = field(default_factory=dict)
    threshold: Optional[float] = None


# ----------------------------------------------------------------------------
# Random inputs
# ----------------------------------------------------------------------------
def case_rng(seed: int, suite: str, index: int) -> np.random.Generator:
    """Generator for one case, independent of execution order."""
    return np.random.default_rng(np.random.SeedSequence([seed, zlib.crc32(suite.encode()), index]))


def random_point(rng: np.random.Generator, modes: int, radius: float) -> PhasePoint:
    """Uniform point of the ball ``|X| <= radius``."""
    v = rng.normal(size=2 * modes)
    v *= radius * rng.random() ** (1.0 / (2 * modes)) / np.linalg.norm(v)
    return PhasePoint.from_vector(v)


def random_vector(rng: np.random.Generator, spec: TruncationSpec, max_degree: int,
                  support: int = 8) -> FockVector:
    """Sparse complex vector supported on degrees ``<= max_degree``."""
    candidates = enumerate_basis(spec.with_degree(min(max_degree, spec.max_degree)))
    picks = rng.choice(len(candidates), size=min(support, len(candidates)), replace=False)
    values = rng.normal(size=len(picks)) + 1j * rng.normal(size=len(picks))
    return FockVector(spec, {candidates[k]: v for k, v in zip(sorted(picks), values)})


def random_poly(rng: np.random.Generator, nvars: int, max_degree: int, terms: int = 6) -> Poly:
    """Sparse complex polynomial of degree ``<= max_degree``."""
    exponents = enumerate_basis(TruncationSpec(nvars, max_degree))
    picks = rng.choice(len(exponents), size=min(terms, len(exponents)), replace=False)
    values = rng.normal(size=len(picks)) + 1j * rng.normal(size=len(picks))
    return {exponents[k]: complex(v) for k, v in zip(sorted(picks), values)}


def random_symbol(rng: np.random.Generator, modes: int, max_degree: int,
                  terms: int = 6) -> PhaseSymbol:
    """Polynomial phase-space symbol."""
    return PhaseSymbol.from_poly(modes, random_poly(rng, 2 * modes, max_degree, terms))


def random_ladder(rng: np.random.Generator, modes: int, max_degree: int) -> LadderPolynomial:
    """Dense normal-ordered polynomial with ``|a| + |b| <= max_degree``."""
    keys = enumerate_basis(TruncationSpec(2 * modes, max_degree))
    values = rng.normal(size=len(keys)) + 1j * rng.normal(size=len(keys))
    return LadderPolynomial(modes, {(k[:modes], k[modes:]): v for k, v in zip(keys, values)})


def _relative(diff: float, scale: float) -> float:
    return float(diff) / max(1.0, float(scale))


def _record(index: int, payload: Any, residual: float, threshold: float,
            label: str = "", bound: Optional[float] = None) -> CaseRecord:
    """``passed`` iff ``residual <= bound`` when a bound is given, else ``<= threshold``."""
    limit = threshold if bound is None else bound
    passed = bool(math.isfinite(residual) and residual <= limit)
    return CaseRecord(index, digest(payload), float(residual), passed, bound, label)


def _mode_choice(cfg: SuiteConfig, index: int, choices: Tuple[int, ...]) -> int:
    return cfg.modes if "modes" in cfg.explicit else choices[index % len(choices)]


def _h_choice(cfg: SuiteConfig, index: int, choices: Tuple[float, ...]) -> float:
    return cfg.h if "h" in cfg.explicit else choices[index % len(choices)]


# seuils propres aux suites (resserrés par un --tol explicite)
REPRODUCING_THRESHOLD = 1e-8
SPLIT_THRESHOLD = 1e-12
TJ_THRESHOLD = 1e-10
PLANE_WAVE_THRESHOLD = 1e-12
BRIDGE_THRESHOLD = 1e-10


# ----------------------------------------------------------------------------
# fock-space
# ----------------------------------------------------------------------------
def coherent_product_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``I(Psi_X, Psi_Y) = exp(X.Y/2h) Psi_{X+Y}`` and decay of the rest term in ``N``."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "coherent-product", idx)
        x, y = random_point(rng, cfg.modes, 0.5), random_point(rng, cfg.modes, 0.5)
        residual = coherent_product_check(x, y, cfg.h, spec)
        payload = {"x": x.vector(), "y": y.vector(), "h": cfg.h, "N": cfg.max_degree}
        records.append(_record(idx, payload, residual, cfg.tolerance))
    rng = case_rng(cfg.seed, "coherent-product", cfg.cases)
    x, y = random_point(rng, cfg.modes, 0.5), random_point(rng, cfg.modes, 0.5)
    degrees = (4, 8, 12, 16)
    trail = coherent_product_trail(x, y, cfg.h, cfg.modes, degrees)
    logger.debug("coherent-product decay over N=%s: %s", degrees, trail)
    increase = max(max(b - a for a, b in zip(trail, trail[1:])), 0.0)
    records.append(CaseRecord(
        cfg.cases,
        digest({"x": x.vector(), "y": y.vector(), "h": cfg.h, "N": degrees}),
        increase,
        decays(trail),
        None,
        "decay",
    ))
    return records


# pas de tolérance réglable: inégalité exacte
NORM_SLACK = 1e-12
# (R, R', R'') avec 1/R'' = 1/R + 1/R'
NORM_PAIRS = ((2.0, 2.0, 1.0), (3.0, 1.5, 1.0), (4.0, 4.0 / 3.0, 1.0))


def norm_bound_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``||I(f, g)||_{R''} <= ||f||_R ||g||_{R'}`` with ``1/R'' = 1/R + 1/R'``, and the basis law."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    wide = spec.with_degree(2 * cfg.max_degree)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "norm-bound", idx)
        r1, r2, r3 = NORM_PAIRS[idx % len(NORM_PAIRS)]
        f = random_vector(rng, spec, cfg.max_degree, support=6)
        g = random_vector(rng, spec, cfg.max_degree, support=6)
        lhs = weighted_norm(compose_I(f, g, spec=wide), r3)
        rhs = weighted_norm(f, r1) * weighted_norm(g, r2)
        payload = {"f": f.to_dict(), "g": g.to_dict(), "R": [r1, r2]}
        records.append(_record(idx, payload, lhs, cfg.tolerance, f"R={r1:g},{r2:g}",
                               bound=rhs * (1.0 + NORM_SLACK) + NORM_SLACK))
    for offset, modes in enumerate((1, 2, 3)):
        law = TruncationSpec(modes, 12)
        residual = 0.0
        basis = enumerate_basis(law)
        for alpha in basis:
            for beta in basis:
                if sum(alpha) + sum(beta) > law.max_degree:
                    continue
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                expected = math.sqrt(math.prod(math.comb(g, a) for g, a in zip(gamma, alpha)))
                out = compose_I(FockVector.basis(law, alpha), FockVector.basis(law, beta), strict=True)
                residual = max(residual, abs(out.coeff(gamma) - expected) / expected,
                               math.sqrt(abs(out.norm() ** 2 - abs(out.coeff(gamma)) ** 2)))
        records.append(_record(cfg.cases + offset, {"modes": modes, "N": 12}, residual,
                               cfg.tolerance, f"basis-law n={modes}"))
    return records


# ----------------------------------------------------------------------------
# bargmann
# ----------------------------------------------------------------------------
def bargmann_factorization_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``T(I(f, g)) = T f . T g`` and both ladder intertwinings."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    half = max(cfg.max_degree // 2, 0)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "bargmann-factorization", idx)
        f = random_vector(rng, spec, min(5, half))
        g = random_vector(rng, spec, min(5, half))
        direction = rng.normal(size=cfg.modes)
        tf = t_fh(f, cfg.h).to_symbol()
        product = t_fh(compose_I(f, g, strict=True), cfg.h).to_symbol()
        expected = tf * t_fh(g, cfg.h).to_symbol()
        raised = t_fh(create_along(direction, f), cfg.h).to_symbol()
        lowered = t_fh(annihilate_along(direction, f), cfg.h).to_symbol()
        residual = max(
            _relative(product.max_coeff_diff(expected), expected.max_abs_coeff()),
            _relative(raised.max_coeff_diff(creation_multiplier(direction, cfg.h) * tf),
                      raised.max_abs_coeff()),
            _relative(lowered.max_coeff_diff(t_fh(f, cfg.h).annihilation_derivative(direction)),
                      lowered.max_abs_coeff()),
        )
        payload = {"f": f.to_dict(), "g": g.to_dict(), "V": direction, "h": cfg.h}
        records.append(_record(idx, payload, residual, cfg.tolerance))
    return records


def reproducing_kernel_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Gauss-Hermite value of the reproducing integral against ``T^FH f(X)``."""
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "reproducing-kernel", idx)
        modes = _mode_choice(cfg, idx, (1, 2))
        spec = TruncationSpec(modes, min(cfg.max_degree, 4))
        f = random_vector(rng, spec, spec.max_degree, support=4)
        x = random_point(rng, modes, 1.0)
        value = reproducing_apply(f, cfg.h, x, order=cfg.quad_order, tol=REPRODUCING_THRESHOLD)
        expected = t_fh_eval(f, cfg.h, x)
        payload = {"f": f.to_dict(), "x": x.vector(), "h": cfg.h, "order": cfg.quad_order}
        records.append(_record(idx, payload, _relative(abs(value - expected), abs(expected)),
                               cfg.acceptance, f"n={modes}"))
    return records


def hermite_identity_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Expansion of ``(x - iy)^m / sqrt(m!)`` on ``H_p(x) H_q(y)``, ``m <= 12``."""
    records = []
    for m in range(13):
        split = hermite_split_identity_check(m)
        logger.debug("hermite-identity m=%d corrected=%.3e printed=%.3e",
                     m, split.corrected, split.printed)
        records.append(_record(m, {"m": m}, split.corrected, cfg.acceptance, f"m={m}"))
    return records


def stochastic_extension_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Cylindrical approximations along nested subspaces of ``R^4``."""
    dim = 4
    gauss = GaussianSpec(dim, cfg.h)
    records = []

    linear = PhaseSymbol.from_poly(dim // 2, {(1, 0, 0, 0): 1.0})
    gaps = stochastic_extension_check(linear, [[0], [0, 1], [0, 1, 2]], gauss)
    records.append(_record(0, {"F": "x1", "h": cfg.h}, max(gaps), cfg.tolerance, "linear"))

    square = PhaseSymbol.from_poly(dim // 2, {(0, 0, 2, 0): 1.0})
    gaps = stochastic_extension_check(square, [[0], [0, 1, 2], [0, 1, 2, 3]], gauss)
    target = math.sqrt(3.0) * cfg.h
    residual = _relative(max(abs(gaps[0] - target), gaps[1]), target)
    records.append(_record(1, {"F": "x3^2", "h": cfg.h}, residual, cfg.tolerance, "square"))

    spec = TruncationSpec(cfg.modes, min(cfg.max_degree, 3))
    count = min(cfg.cases, 20)
    for k in range(count):
        idx = 2 + k
        rng = case_rng(cfg.seed, "stochastic-extension", idx)
        kind = k % 3
        if kind == 0:
            basis, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
            inner_poly = random_poly(rng, 2, 3, terms=4)
            poly = poly_substitute(inner_poly, [linear_form(list(basis[:, i])) for i in range(2)], dim)
            cylinder = PhaseSymbol.from_poly(dim // 2, poly)
            gaps = stochastic_extension_check(cylinder, [basis[:, :c] for c in range(1, dim + 1)], gauss)
            residual = _relative(max(gaps[1:]), max_abs_coeff(poly))
            payload = {"Q": basis, "P": sorted((list(e), c) for e, c in inner_poly.items())}
            records.append(_record(idx, payload, residual, cfg.tolerance, "rotated"))
        elif kind == 1:
            freq = rng.normal(size=dim)
            expected = math.sqrt(cfg.h) * float(np.linalg.norm(freq))
            residual = abs(linear_form_norm(freq, gauss) - expected) / expected
            records.append(_record(idx, {"a": freq, "h": cfg.h}, residual, cfg.tolerance, "linear-norm"))
        else:
            f = random_vector(rng, spec, spec.max_degree)
            norms = restricted_norms(f, cfg.h)
            total = f.norm()
            violation = max(
                [max(a - b, 0.0) for a, b in zip(norms, norms[1:])]
                + [max(v - total, 0.0) for v in norms]
                + [abs(norms[-1] - total)]
            )
            records.append(_record(idx, {"f": f.to_dict(), "h": cfg.h}, violation / total,
                                   cfg.tolerance, "restricted-norms"))
    return records


# ----------------------------------------------------------------------------
# quantization
# ----------------------------------------------------------------------------
def husimi_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Wick symbol of the anti-Wick operator of ``F`` is ``H_h F``."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    top = max(min(cfg.max_degree - 2, 4), 0)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "husimi", idx)
        sym = random_symbol(rng, cfg.modes, top)
        smoothed = heat_apply(sym, cfg.h)
        op = anti_wick_op(sym, cfg.h, spec)
        wick = matrix_wick_symbol(op, cfg.h, max_order=max(sym.degree(), 0))
        direct = wick_to_operator(smoothed, cfg.h, spec)
        residual = max(
            _relative(wick.max_coeff_diff(smoothed), smoothed.max_abs_coeff()),
            _relative(op.max_abs_diff(direct), float(np.max(np.abs(direct.entries), initial=0.0))),
        )
        payload = {"F": sym.to_dict(), "h": cfg.h, "N": cfg.max_degree}
        records.append(_record(idx, payload, residual, cfg.tolerance))
    return records


def identification_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``J = Op^AW(T^FH U)`` on the block of degree ``<= N - deg U``."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "identification-tj", idx)
        u = random_vector(rng, spec, min(3, cfg.max_degree), support=5)
        residual = _relative(t_j_equality_check(u, spec), max(abs(c) for c in u.coeffs.values()))
        records.append(_record(idx, {"U": u.to_dict()}, residual, cfg.acceptance))
    return records


def mizrahi_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Matrix-product Wick symbol against the summed Wick composition series."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "mizrahi", idx)
        left, right = random_ladder(rng, cfg.modes, 2), random_ladder(rng, cfg.modes, 2)
        x = PhasePoint.origin(cfg.modes) if idx == 0 else random_point(rng, cfg.modes, 1.0)
        product = ladder_to_matrix(left, spec) @ ladder_to_matrix(right, spec)
        measured, tail = wick_symbol_eval(product, cfg.h, x)
        series = mizrahi_compose(normal_symbol(left, cfg.h), normal_symbol(right, cfg.h), cfg.h)
        expected = series.evaluate(x.vector())
        logger.debug("mizrahi case %d: coherent tail %.3e", idx, tail)
        payload = {
            "A": sorted((list(a), list(b), c) for (a, b), c in left.terms.items()),
            "B": sorted((list(a), list(b), c) for (a, b), c in right.terms.items()),
            "x": x.vector(),
            "h": cfg.h,
        }
        records.append(_record(idx, payload, _relative(abs(measured - expected), abs(expected)),
                               cfg.tolerance, "origin" if idx == 0 else ""))
    return records


# expm tronqué: seuil relâché
COVARIANCE_SLACK = 1e3


def displacement_covariance_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``sigma(V(X) A V(-X))(Y) = sigma(A)(Y - X)`` at small ``X, Y``."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "displacement-covariance", idx)
        ladder = random_ladder(rng, cfg.modes, 2)
        x = random_point(rng, cfg.modes, 0.5)
        points = [random_point(rng, cfg.modes, 0.5) for _ in range(5)]
        residual = displacement_covariance_check(ladder_to_matrix(ladder, spec), x, cfg.h, points)
        scale = max(abs(c) for c in ladder.terms.values())
        payload = {
            "A": sorted((list(a), list(b), c) for (a, b), c in ladder.terms.items()),
            "x": x.vector(),
            "Y": [y.vector() for y in points],
        }
        records.append(_record(idx, payload, _relative(residual, scale),
                               cfg.tolerance * COVARIANCE_SLACK))
    return records


# ----------------------------------------------------------------------------
# star-products
# ----------------------------------------------------------------------------
PLANE_WAVE_ORDER = 20


def weyl_compose_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``Op(F) Op(G) = Op(K_h(F, G))`` on safe blocks; plane-wave closed form."""
    spec = TruncationSpec(cfg.modes, cfg.max_degree)
    safe = cfg.max_degree - 2
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "weyl-compose", idx)
        if idx % 2 == 0:
            f, g = random_symbol(rng, cfg.modes, 2), random_symbol(rng, cfg.modes, 2)
            composed = weyl_compose(f, g, cfg.h).total()
            lhs = weyl_op(f, cfg.h, spec) @ weyl_op(g, cfg.h, spec)
            rhs = weyl_op(composed, cfg.h, spec)
            scale = float(np.max(np.abs(rhs.block(safe)), initial=0.0)) if safe >= 0 else 0.0
            residual = _relative(lhs.max_abs_diff(rhs, safe), scale)
            label = "polynomial"
        else:
            a = random_point(rng, cfg.modes, 1.0).vector()
            b = random_point(rng, cfg.modes, 1.0).vector()
            f = PhaseSymbol.plane_wave(cfg.modes, a)
            g = PhaseSymbol.plane_wave(cfg.modes, b)
            expansion = weyl_compose(f, g, cfg.h, order=PLANE_WAVE_ORDER)
            grid = sobol_grid(cfg.modes, 64, seed=idx)
            unimodular = float(np.max(np.abs(np.abs(expansion.closed_form.evaluate(grid)) - 1.0)))
            residual = max(
                expansion.partial_sum(PLANE_WAVE_ORDER).max_coeff_diff(expansion.closed_form),
                unimodular,
            )
            label = "plane-wave"
        limit = cfg.acceptance if label == "plane-wave" else cfg.tolerance
        payload = {"F": f.to_dict(), "G": g.to_dict(), "h": cfg.h, "N": cfg.max_degree}
        records.append(_record(idx, payload, residual, limit, label))
    return records


def lemma_bridge_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """``Wick(H_{h/2}F, H_{h/2}G) = H_{h/2} Weyl(F, G)`` on polynomials."""
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "lemma-bridge", idx)
        modes = _mode_choice(cfg, idx, (1, 2))
        h = _h_choice(cfg, idx // 2, (0.1, 1.0))
        f, g = random_symbol(rng, modes, 4), random_symbol(rng, modes, 4)
        scale = f.max_abs_coeff() * g.max_abs_coeff()
        residual = _relative(lemma_bridge_check(f, g, h), scale)
        payload = {"F": f.to_dict(), "G": g.to_dict(), "h": h}
        records.append(_record(idx, payload, residual, cfg.acceptance, f"n={modes} h={h:g}"))
    return records


def remainder_bound_suite(cfg: SuiteConfig) -> List[CaseRecord]:
    """Scaled Weyl remainder and ``|C_k|`` against their trace bounds, ``Q = |X|^2``."""
    form = QuadraticForm.identity(cfg.modes)
    records = []
    for idx in range(cfg.cases):
        rng = case_rng(cfg.seed, "remainder-bound", idx)
        order = idx % 5
        h = _h_choice(cfg, idx // 5, (0.1, 1.0))
        a = random_point(rng, cfg.modes, 1.0).vector()
        b = random_point(rng, cfg.modes, 1.0).vector()
        f = PhaseSymbol.plane_wave(cfg.modes, a)
        g = PhaseSymbol.plane_wave(cfg.modes, b)
        grid = sobol_grid(cfg.modes, 512, seed=idx)
        measured, bound = remainder_check(f, g, h, order, form, grid)
        terms = weyl_bound_check(f, g, form, 6, grid)
        term_ok = all(sup <= limit * (1.0 + NORM_SLACK) for sup, limit in terms)
        payload = {"a": a, "b": b, "h": h, "M": order}
        record = _record(idx, payload, measured, cfg.tolerance, f"M={order} h={h:g}", bound=bound)
        if not term_ok:
            logger.warning("remainder-bound case %d: a term exceeds its trace bound", idx)
            record = CaseRecord(record.index, record.digest, record.residual, False,
                                record.bound, record.label)
        records.append(record)
    return records


# ----------------------------------------------------------------------------
# Registry
# ----------------------------------------------------------------------------
SUITES: Dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("coherent-product",
              "composing two coherent states gives exp(X.Y/2h) times the coherent state "
              "at X+Y; the rest term decays as the truncation degree grows",
              coherent_product_suite, {"max_degree": 16}),
        Suite("norm-bound",
              "the composition law is bounded between weighted Fock norms with "
              "1/R'' = 1/R + 1/R', and is sqrt((a+b)!/(a!b!)) u_(a+b) on basis vectors",
              norm_bound_suite, {"cases": 1000}),
        Suite("bargmann-factorization",
              "the anti-holomorphic Segal-Bargmann transform turns the composition law "
              "into pointwise multiplication and intertwines creation/annihilation",
              bargmann_factorization_suite, {"cases": 200, "max_degree": 10}),
        Suite("reproducing-kernel",
              "integrating the Bargmann kernel against the Gaussian-space transform "
              "reproduces the anti-holomorphic transform",
              reproducing_kernel_suite, {"cases": 20}, REPRODUCING_THRESHOLD),
        Suite("hermite-identity",
              "(x - iy)^m / sqrt(m!) expands on H_p(x) H_q(y), p + q = m, with "
              "weights sqrt(m!/(p!q!)) (-i)^q",
              hermite_identity_suite, threshold=SPLIT_THRESHOLD),
        Suite("stochastic-extension",
              "cylindrical approximations along nested subspaces form a Cauchy "
              "sequence that stops once the subspace contains the base",
              stochastic_extension_suite),
        Suite("husimi",
              "the Wick symbol of the anti-Wick quantization of F is the heat-smoothed "
              "symbol H_h F",
              husimi_suite),
        Suite("identification-tj",
              "the identification operator built from U equals the anti-Wick "
              "quantization of its transform, at h = 1",
              identification_suite, {"cases": 50, "max_degree": 10}, TJ_THRESHOLD),
        Suite("mizrahi",
              "the Wick symbol of a product is the h-series of the Wick "
              "bidifferential terms; at X = 0 this is the vacuum expectation identity",
              mizrahi_suite, {"cases": 50, "max_degree": 20}),
        Suite("displacement-covariance",
              "conjugating by a displacement operator translates the Wick symbol",
              displacement_covariance_suite, {"cases": 10, "max_degree": 20}),
        Suite("weyl-compose",
              "Weyl quantization turns the Weyl star product into operator "
              "composition; plane waves compose to exp(ih sigma(a,b)/2) E_(a+b)",
              weyl_compose_suite, {"cases": 20}, PLANE_WAVE_THRESHOLD),
        Suite("lemma-bridge",
              "the Wick series of heat-smoothed symbols is the heat-smoothed Weyl series",
              lemma_bridge_suite, {"cases": 200}, BRIDGE_THRESHOLD),
        Suite("remainder-bound",
              "the Weyl series remainder after order M is bounded by trace powers of "
              "the weight form times exp(h Tr/2)",
              remainder_bound_suite, {"cases": 20}),
    )
}


def suite_names() -> List[str]:
    """Suite names in registry order."""
    return list(SUITES)


def manifest_lines() -> List[str]:
    """``name: statement`` for every suite."""
    return [f"{s.name}: {s.statement}" for s in SUITES.values()]
