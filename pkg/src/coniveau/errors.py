"""Exception hierarchy shared by every module of the package."""


class ConiveauError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ConiveauError, ValueError):
    """Malformed input: unknown variable, rank mismatch, bad parameter."""


class TruncationError(ConiveauError):
    """A requested coefficient lies beyond the configured truncation order."""


class DivisibilityError(ConiveauError, ArithmeticError):
    """An exact division left a nonzero remainder."""


class LoadError(InputError):
    """A model description violated one of the model invariants."""

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class InternalError(ConiveauError, AssertionError):
    """An internal consistency condition failed (indicates a bug)."""
