"""
Error Types

One exception per failure kind raised by the engine, the oracles and the
command-line driver. Each subclasses the closest builtin so callers that
only know ``ValueError`` & co. keep working.
"""


class DimensionError(ValueError):
    """Monomials or signatures with different variable counts were combined."""


class ExponentOverflowError(OverflowError):
    """An exponent left the supported 16-bit range."""


class NotDivisibleError(ArithmeticError):
    """A monomial quotient was requested where the divisor does not divide."""


class InputError(ValueError):
    """Bad input to an operation (empty ideal, zero generator, index out of range...)."""


class ConfigurationError(ValueError):
    """Incompatible rings, fields or orders were mixed."""


class ParseError(ValueError):
    """Ideal file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownVariableError(ParseError):
    """A polynomial mentions a name that is not in the ring line."""


class MalformedTokenError(ParseError):
    """Unexpected character, token or line structure."""


class CharacteristicError(ParseError):
    """Positive characteristic that is not a usable prime."""


class MissingHeaderError(ParseError):
    """ring, char or order line missing (or no poly lines at all)."""


class AdmissibilityError(RuntimeError):
    """
    A freshly reduced member does not rank below the member it came from.

    Raised by the admissibility monitor; the correctness theorem no longer
    applies to the run, so the run is aborted.
    """

    def __init__(self, new, source, order_kind):
        self.new = new
        self.source = source
        self.order_kind = order_kind
        super().__init__(
            f"{order_kind} order is not admissible here: new member "
            f"#{new.id} (sig {new.sig}) does not rank below source "
            f"#{source.id} (sig {source.sig})"
        )


class QueueEmpty(LookupError):
    """No critical pair is left to select."""


class UsageError(ValueError):
    """Bad command-line usage."""
