"""Shared exception types."""


class ParseError(ValueError):
    """Malformed word or identity text; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SymbolAbsentError(ValueError):
    """A symbol required to occur in a word does not."""


class PreconditionError(ValueError):
    """Identity does not share support and simple variables across sides."""


class CapExceededError(RuntimeError):
    """An enumeration bound was exceeded; carries the computed size."""

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class BoundExceededError(ValueError):
    """A tractability guard on an operation's arguments was violated."""


class UnknownNameError(KeyError):
    """Lookup of a monoid, variety or lattice node by an unknown name."""


class ComparablePairError(ValueError):
    """Incomparability witnesses requested for a comparable pair."""
