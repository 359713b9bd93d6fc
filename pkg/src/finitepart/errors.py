"""Exception types shared across the package."""


class FinitePartError(Exception):
    """Base class for all finitepart-specific failures."""


class NonconvergenceError(FinitePartError):
    """A series or adaptive scheme hit its work cap before meeting tolerance.

    ``partial`` carries the best available estimate so callers can still
    inspect or report it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DivergentIntegralError(FinitePartError, ValueError):
    """The requested integral diverges at infinity (or cannot be shown to
    converge for a user-supplied coefficient stream)."""


class IndeterminateZeroOrderError(FinitePartError):
    """All scanned Maclaurin coefficients were zero; the order of the zero
    at the origin could not be established within the scan cap."""
