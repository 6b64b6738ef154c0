"""Exception and warning types raised across the package."""


class MirrorFieldError(ValueError):
    """Invalid mirror-field parameters."""


class DomainError(ValueError):
    """Coordinate outside the region where the parabolic field model holds."""


class GridError(ValueError):
    """Grid too coarse or too narrow for the requested eigenstates."""


class ConvergenceError(RuntimeError):
    """An iterative numerical procedure failed to converge.

    Parameters
    ----------
    message : str
        Human readable description.
    achieved : float, optional
        The best residual or change reached before giving up.
    """

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class EscapeError(RuntimeError):
    """A classical trajectory left the trapping region."""

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class ValidityWarning(UserWarning):
    """Parameters outside the regime where the approximations are trustworthy."""
