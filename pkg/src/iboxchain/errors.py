"""Exception types raised by the library."""


class IBoxError(Exception):
    """Base class for all library errors."""


class NotCartan(IBoxError, ValueError):
    pass


class NotSymmetrizable(IBoxError, ValueError):
    pass


class UnknownType(IBoxError, ValueError):
    pass


class UnknownIndex(IBoxError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class OutOfRange(IBoxError, IndexError):
    pass


class EmptyWord(IBoxError, ValueError):
    pass


class NoSuchBox(IBoxError, ValueError):
    pass


class WindowExceeded(IBoxError, ValueError):
    pass


class NotAChain(IBoxError, ValueError):
    """Raised by chain validation; carries the failing index and condition."""

    def __init__(self, message, index=None, condition=None):
        super().__init__(message)
        self.index = index
        self.condition = condition


class NotMovable(IBoxError, ValueError):
    pass


class NotFlippable(IBoxError, ValueError):
    pass


class NotExchangeable(IBoxError, ValueError):
    pass


class NotAPermutation(IBoxError, ValueError):
    pass


class ParseError(IBoxError, ValueError):
    pass


class InconsistentMatrix(IBoxError, RuntimeError):
    """Two positive clauses disagree on the same entry pair."""
