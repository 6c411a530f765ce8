"""Exception types shared across the package."""


class QGenocchiError(Exception):
    """Base class for package-specific errors."""


class PoleError(QGenocchiError, ZeroDivisionError):
    """Evaluation of a rational function at a root of its denominator."""


class DomainError(QGenocchiError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class LengthError(QGenocchiError, ValueError):
    """Sequence argument has the wrong length."""


class PrecisionExhausted(QGenocchiError, ArithmeticError):
    """A p-adic result would carry no significant digits."""
