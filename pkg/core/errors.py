"""Exceptions raised by the operator-calculus core."""


class FockCalculusError(ValueError):
    """Base class for every error raised by ``core``."""


class TruncationError(FockCalculusError):
    """A result would exceed the maximal degree in strict mode."""


class SpecMismatchError(FockCalculusError):
    """Operands live on different truncations or mode counts."""


class ModeIndexError(FockCalculusError):
    """Mode index outside ``1..modes``."""


class UnsupportedSymbolError(FockCalculusError):
    """The symbol shape is outside what an operation can handle exactly."""


class QuadratureError(FockCalculusError):
    """Quadrature is infeasible or did not converge."""
