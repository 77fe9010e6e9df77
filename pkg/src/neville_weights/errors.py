"""Exception types raised across the package."""


class WeightsError(Exception):
    """Base class for all package errors."""


class ModeError(WeightsError, TypeError):
    """Exact and float scalars were combined, or an exact-only routine got floats."""


class PoleError(WeightsError, ZeroDivisionError):
    """A rational function was evaluated at (or numerically at) a root of its denominator."""


class OrderError(WeightsError, ValueError):
    """Stencil nodes are not strictly increasing."""


class ArityError(WeightsError, ValueError):
    """Wrong number of nodes or samples."""


class RangeError(WeightsError, ValueError):
    """Subdivision level, shift, derivative order or offset out of range."""


class SingularSystemError(WeightsError, ArithmeticError):
    """The oracle linear system does not determine the weights uniquely."""


class InconsistentSystemError(WeightsError, ArithmeticError):
    """Oracle rows left out of the solve are not satisfied by the solution."""
