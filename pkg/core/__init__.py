"""Core numerical library for the truncated Fock-space calculus."""

from .errors import (
    FockCalculusError,
    ModeIndexError,
    QuadratureError,
    SpecMismatchError,
    TruncationError,
    UnsupportedSymbolError,
)
from .multi_index import TruncationSpec, enumerate_basis, merge_weight
from .fock_space import FockVector, PhasePoint, coherent_state, compose_I
from .operator_matrix import OperatorMatrix
from .symbol_algebra import PhaseSymbol, QuadraticForm, heat_apply
from .bargmann import BargmannPoly, GaussianSpec, t_fh
from .quantization import LadderPolynomial, anti_wick_op, weyl_op
from .star_products import StarExpansion, mizrahi_compose, weyl_compose

__all__ = [
    "FockCalculusError",
    "ModeIndexError",
    "QuadratureError",
    "SpecMismatchError",
    "TruncationError",
    "UnsupportedSymbolError",
    "TruncationSpec",
    "enumerate_basis",
    "merge_weight",
    "FockVector",
    "PhasePoint",
    "coherent_state",
    "compose_I",
    "OperatorMatrix",
    "PhaseSymbol",
    "QuadraticForm",
    "heat_apply",
    "BargmannPoly",
    "GaussianSpec",
    "t_fh",
    "LadderPolynomial",
    "anti_wick_op",
    "weyl_op",
    "StarExpansion",
    "mizrahi_compose",
    "weyl_compose",
]
