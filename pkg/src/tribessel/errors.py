"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation supports."""


class DivergenceError(ValueError):
    """The requested definite integral does not converge."""


class BranchCutError(ValueError):
    """An evaluation landed on a branch cut and no principal-value fallback was allowed."""


class SingularCombinationError(ValueError):
    """A parameter combination is singular and has no meaningful finite value."""


class UnsupportedPowerError(ValueError):
    """The power parameter is outside the range a closed form supports."""
