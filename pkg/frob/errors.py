"""
Exception hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI reports for it.
"""


class FrobError(Exception):
    """Base class for all errors raised by the frob package."""
    exit_code = 1


class InvalidInputError(FrobError, ValueError):
    """Input violates a documented precondition (gcd, d < 2, duplicates, ...)."""
    exit_code = 2


class NoInverseError(InvalidInputError):
    """The requested modular inverse does not exist."""


class MethodMismatchError(InvalidInputError):
    """The requested backend does not apply to the denomination set."""


class FrobOverflowError(FrobError, OverflowError):
    """A result does not fit in a signed 64-bit integer."""
    exit_code = 3


class ResourceLimitError(FrobError):
    """A configured ceiling (table cells, output size, horizon) was hit."""
    exit_code = 4


class NotFoundBelowHorizonError(ResourceLimitError):
    """A search finished its horizon without finding what it looked for."""


class InternalError(FrobError, AssertionError):
    """An exactness assertion failed; this indicates a bug."""
    exit_code = 1
