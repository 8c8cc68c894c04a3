"""Exception hierarchy shared across the package."""


class OnlineSearchError(Exception):
    """Base class for every error raised by this package."""


class BoundsError(OnlineSearchError):
    """Domain bounds are not ordered positive values."""


class ModeError(OnlineSearchError):
    """Operation invoked under the wrong price mode, or a price of the wrong kind."""


class LengthError(OnlineSearchError):
    """Price sequence shorter than the problem allows."""


class RangeError(OnlineSearchError):
    """A price falls outside its domain."""


class SpecError(OnlineSearchError):
    """Algorithm specification is invalid for the requested operation."""


class OrderError(OnlineSearchError):
    """Reservation prices supplied in an order the comparison does not accept."""


class BudgetError(OnlineSearchError):
    """Requested enumeration exceeds the configured budget."""


class PreconditionError(OnlineSearchError):
    """Inputs lie outside the range where the closed form is defined."""


class MeasureError(OnlineSearchError):
    """The measure does not support the requested operation."""
