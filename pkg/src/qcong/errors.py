"""Exception hierarchy shared by every qcong module."""


class QCongError(Exception):
    """Base class for all library errors."""


class StructuralError(QCongError, ValueError):
    """Malformed input: bad exponents, ring mismatch, invalid factor."""


class InversionError(QCongError, ArithmeticError):
    """Attempt to invert a series whose constant term is not a unit."""


class PreconditionError(QCongError, ValueError):
    """A documented precondition of an operation does not hold."""


class InstantiationError(QCongError, ValueError):
    """A theorem family was instantiated with invalid or non-integral parameters."""


class ResourceError(QCongError, RuntimeError):
    """The requested computation exceeds the configured series-order budget."""
