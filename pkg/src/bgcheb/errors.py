"""Exception types raised across the package."""


class BgChebError(Exception):
    """Base class for all package errors."""


class DomainError(BgChebError, ValueError):
    """An argument lies outside the admissible domain."""


class SingularityError(BgChebError, ArithmeticError):
    """Evaluation requested at (or too close to) a singular point."""


class NearSingularError(SingularityError):
    """A ratio form has a denominator below the configured threshold."""


class DegenerateNodesError(BgChebError, ValueError):
    """Two interpolation nodes coincide."""


class MissingValuesError(BgChebError, ValueError):
    """An interpolant was evaluated without ordinates."""
