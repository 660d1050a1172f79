"""Shared exception types."""


class ScaleLimitError(ValueError):
    """An input exceeds the configured size limit for an exhaustive routine."""


class InvariantViolation(RuntimeError):
    """A quantity the library guarantees by construction failed a runtime check."""
