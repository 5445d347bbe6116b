"""Exception types raised across the package."""


class AtkinError(Exception):
    """Base class for all package errors."""


class DivisionByZeroSeries(AtkinError, ZeroDivisionError):
    pass


class DomainError(AtkinError, ValueError):
    pass


class InsufficientPrecision(AtkinError, ValueError):
    pass


class InvalidWeight(AtkinError, ValueError):
    pass


class UnsupportedWeight(InvalidWeight):
    pass


class OddWeight(InvalidWeight):
    pass


class NotPolynomialInJ(AtkinError, ValueError):
    pass


class InvalidParams(AtkinError, ValueError):
    pass


class IndexOutOfRange(AtkinError, IndexError):
    pass


class IndexBelowRange(IndexOutOfRange):
    pass


class UnsupportedPair(AtkinError, ValueError):
    pass


class PoleAtLambda(AtkinError, ZeroDivisionError):
    pass


class NonzeroRemainder(AtkinError, ArithmeticError):
    pass


class NotMonic(AtkinError, ValueError):
    pass


class NotPIntegral(AtkinError, ArithmeticError):
    pass


class CompositeModulus(AtkinError, ValueError):
    pass


class SingularHankel(AtkinError, ArithmeticError):
    pass


class QDBreakdown(AtkinError, ArithmeticError):
    pass


class InconsistentRoutes(AtkinError, AssertionError):
    """Two independent computations of the same quantity disagree."""
