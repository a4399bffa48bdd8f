"""Exception types shared across the package."""


class PolarLegendreError(Exception):
    """Base class for every error raised by this package."""


class ExactInputError(PolarLegendreError, TypeError):
    """Exact mode received an input that is not an exact rational quantity."""


class DegreeBoundError(PolarLegendreError, ValueError):
    """Requested degree exceeds the configured exact-arithmetic bound."""


class ConsistencyError(PolarLegendreError):
    """An internal cross-check failed, e.g. a linear division left a remainder."""


class ConvergenceError(PolarLegendreError):
    """An iteration failed to converge.  ``detail`` carries solver state."""

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class MultiplicityViolationError(PolarLegendreError):
    """More than two roots clustered together; multiplicities above 2 are impossible."""


class SegmentBranchError(PolarLegendreError, ValueError):
    """The exterior square-root branch is undefined on the segment [-1, 1]."""


class RegionError(PolarLegendreError, ValueError):
    """An asymptotic statement was evaluated outside its region of validity."""
