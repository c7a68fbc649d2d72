"""Exception types shared across the package."""


class GerbeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GerbeError):
    """Malformed graph file input."""


class BoundExceededError(GerbeError):
    """An enumeration was requested beyond the configured vertex bound."""


class GramMismatchError(GerbeError):
    """Two vector systems were expected to share a Gram matrix but do not."""


class DeficientSpanError(GerbeError):
    """Vectors do not span their ambient space (input not reduced)."""


class TrivialRepresentationError(GerbeError):
    """Operation undefined for a trivial (c = 0) representation."""
