"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPositionError(GameError, ValueError):
    """Position violates the constraints of the selected game variant."""


class IllegalMoveError(GameError, ValueError):
    """Move is not legal from the given position under the variant."""


class TerminalPositionError(GameError, ValueError):
    """Operation requires a nonterminal position."""


class OracleBoundError(GameError):
    """Entries exceed the configured bound of the brute-force oracle."""


class ContinuedFractionError(GameError, ValueError):
    """Quotient sequence violates the canonical convention."""


class UnknownSessionError(GameError, KeyError):
    """No session exists for the requested id."""
