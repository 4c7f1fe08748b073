"""Exception hierarchy shared by the exact and numeric layers."""


class QSumsError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(QSumsError, ZeroDivisionError):
    pass


class DivisionByZeroFunction(QSumsError, ZeroDivisionError):
    pass


class PoleAtPoint(QSumsError, ZeroDivisionError):
    pass


class PoleAtOne(PoleAtPoint):
    pass


class SingularAtZ1(QSumsError):
    """The z -> 1 limit of a regularized expression is not a rational function."""


class SingularUnresolved(QSumsError):
    """A singular closed-form term survived regularization."""


class MalformedExponent(QSumsError, ValueError):
    """A q-exponent whose denominator exceeds 2."""


class UnsupportedM(QSumsError, ValueError):
    pass


class DomainError(QSumsError, ValueError):
    pass


class TruncationNotConverged(QSumsError):
    pass


class QuadratureNotConverged(QSumsError):
    pass


class UnknownSuite(QSumsError, KeyError):
    pass


class InvalidRange(QSumsError, ValueError):
    pass


class VersionMismatch(QSumsError):
    pass
