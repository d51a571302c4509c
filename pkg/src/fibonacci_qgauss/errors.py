"""Exceptions raised by the exact-arithmetic and enumeration layers."""


class QGaussError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QGaussError, ValueError):
    """An argument lies outside the domain of an operation."""


class ZeroBaseError(QGaussError, ZeroDivisionError):
    """A Laurent polynomial with negative exponents was evaluated at q = 0."""


class InexactDivisionError(QGaussError, ArithmeticError):
    """A polynomial division that must be exact left a nonzero remainder."""


class NonzeroResidualError(QGaussError, ArithmeticError):
    """Back-substitution in the Gaussian basis did not reduce to zero."""


class NotPrimeError(DomainError):
    """A field size is not prime."""
