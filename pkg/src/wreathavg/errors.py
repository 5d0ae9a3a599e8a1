"""Exception types shared across the package.

Each carries the CLI exit code it maps to.
"""


class WreathError(Exception):
    exit_code = 1


class PreconditionError(WreathError, ValueError):
    """An input violates an operation's precondition."""

    exit_code = 2


class ResourceCapError(WreathError, RuntimeError):
    """A size cap or bit budget would be exceeded.

    ``size`` is the would-be size (elements, or bits for the bit budget) and
    ``cap`` the limit in force, so callers can fall back to cheaper routes.
    """

    exit_code = 3

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class DisagreementError(WreathError, AssertionError):
    """Two independent computations of the same quantity differ."""

    exit_code = 4


class SpecParseError(WreathError, ValueError):
    """Malformed group description; ``pos`` is the 0-based offset."""

    exit_code = 1

    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos
