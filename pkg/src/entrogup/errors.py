"""Shared exception types."""


class NumericalError(RuntimeError):
    """An iterative numerical procedure failed to reach its tolerance."""
