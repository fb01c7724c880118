"""Exception types shared across the package."""


class ModGrobError(Exception):
    """Base class for every package-specific error."""


class NotCoprime(ModGrobError):
    """Moduli handed to a CRT construction share a common factor."""


class ZeroPolynomial(ModGrobError):
    """An operation that needs a nonzero polynomial received zero."""


class RingMismatch(ModGrobError):
    """Operands live in different rings (variables, order, or domain)."""


class DomainError(ModGrobError):
    """The coefficient domain does not support the requested operation."""


class NonMember(ModGrobError):
    """A polynomial expected to lie in an ideal does not."""


class StreamExhausted(ModGrobError):
    """The generator stream ran dry before any prefix was accepted.

    Carries the rejection certificates gathered along the way so callers
    can inspect why each prefix failed.
    """

    def __init__(self, message, certificates=()):
        super().__init__(message)
        self.certificates = tuple(certificates)

    @property
    def last_certificate(self):
        return self.certificates[-1] if self.certificates else None


class OracleFailure(ModGrobError):
    """The supplied oracle returned an answer the checker cannot use."""


class ResourceLimitExceeded(ModGrobError):
    """Completion exceeded the configured pair or reduction budget."""


class ParseError(ModGrobError):
    """Syntax error in a problem file, annotated with line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
