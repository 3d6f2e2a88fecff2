"""Exception hierarchy.

Input problems derive from :class:`ValueError`; resource exhaustion derives
from :class:`BudgetExceeded`.  The CLI maps these to exit codes 2 and 3.
"""


class HsmultError(Exception):
    pass


class InvalidInput(HsmultError, ValueError):
    """Malformed or out-of-contract input."""


class ParseError(InvalidInput):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class UnknownVariable(InvalidInput):
    def __init__(self, name, offset=None):
        where = "" if offset is None else f" at byte {offset}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.offset = offset


class InfiniteColength(InvalidInput):
    """The quotient is not finite dimensional."""


class NotOriginSupported(InvalidInput):
    """The ideal has zeros away from the origin (or is not zero-dimensional)."""


class TruncationInsufficient(InvalidInput):
    """All composites vanish below the branch truncation order."""


class BudgetExceeded(HsmultError):
    """A configured resource budget ran out before an answer was certain."""


class StabilizationError(BudgetExceeded):
    """Differences did not stabilize inside the sampling budget."""


class InternalError(HsmultError, AssertionError):
    """An internal consistency check failed; indicates a bug."""
