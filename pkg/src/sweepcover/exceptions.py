class ResourceCapExceeded(RuntimeError):
    """An enumeration or construction would exceed its configured size cap."""


class ConvergenceError(RuntimeError):
    """Newton iteration failed; ``last`` holds the final ``(z, y)`` iterate."""

    def __init__(self, message, last=None, iterations=None):
        super().__init__(message)
        self.last = last
        self.iterations = iterations


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
