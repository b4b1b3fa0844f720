"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where an operation is defined."""


class TailGuardError(ArithmeticError):
    """A truncated series was evaluated where its truncation order is too small."""

    def __init__(self, message, *, t=None, ratio=None):
        super().__init__(message)
        self.t = t
        self.ratio = ratio
