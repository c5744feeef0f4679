"""Shared exception types."""


class InvalidInstanceError(ValueError):
    """Input violates a documented instance invariant."""


class GuardError(RuntimeError):
    """Instance exceeds a configured size, state-space or dimension limit."""


class InconsistentAnswerError(ValueError):
    """A referee answer contradicts the current candidate intervals."""
