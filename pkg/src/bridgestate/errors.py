"""Exception hierarchy shared by all bridgestate modules.

The CLI maps these onto exit codes: invalid input is exit 2, a failed
mathematical consistency check is exit 1.
"""


class BridgestateError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(BridgestateError, ValueError):
    """The caller supplied a value outside an operation's domain."""


class ConsistencyError(BridgestateError, RuntimeError):
    """An internal cross-check failed.

    Every occurrence means a bug somewhere: the quantities involved are
    proven to satisfy the violated identity for all valid inputs.
    """
