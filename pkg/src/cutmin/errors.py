class InfeasibleSizeError(ValueError):
    """Raised when an exhaustive computation exceeds its size cap."""
