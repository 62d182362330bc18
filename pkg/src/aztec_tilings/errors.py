"""Exception types shared across the package."""


class InvalidOrderError(ValueError):
    """Region or graph order outside the valid range."""


class InvalidHolesError(ValueError):
    """Hole index set violates its size or range constraints."""


class InvalidPointError(ValueError):
    """Point is not a cell center (coordinates must be half-integers)."""


class TooLargeError(ValueError):
    """Instance exceeds an engine's explicit size guard."""


class UnsupportedEmbeddingError(ValueError):
    """Embedded graph has a bounded face that is not a unit square."""


class FactorizationError(ValueError):
    """Axis is missing or not a valid symmetry axis for the graph."""


class CountMismatchError(RuntimeError):
    """Two exact engines disagreed, or an exactness check failed.

    This is always a bug, never a recoverable condition.
    """
