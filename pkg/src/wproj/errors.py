"""Exception hierarchy shared by all wproj modules."""


class WprojError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(WprojError, ValueError):
    """An argument violates a documented precondition."""


class NotPLocalError(InvalidInputError):
    """A rational was used as a P-local integer but its denominator meets P."""


class NotNormalizedError(InvalidInputError):
    """An operation that requires normalized weights received unnormalized ones."""


class InconsistentDataError(WprojError, ValueError):
    """Input data is internally contradictory (no object realizes it)."""


class ResourceLimitError(WprojError, RuntimeError):
    """An enumeration would exceed its configured budget.

    Attributes ``required`` and ``limit`` report how far the request was over
    budget before any work was done.
    """

    def __init__(self, message: str, required: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.required = required
        self.limit = limit
