"""Exception types shared across the package."""


class IstkitError(Exception):
    """Base class for all istkit failures."""


class GridMismatchError(IstkitError):
    """Operands live on grids that are not a Fourier pair."""


class InvariantViolation(IstkitError):
    """A runtime invariant of the computation failed (bad data or too-coarse grid)."""


class ContractionError(InvariantViolation):
    """An integral operator that must be a strict contraction is not."""
