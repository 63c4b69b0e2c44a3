"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """The given instance, walk or file violates a documented precondition."""


class InternalError(RuntimeError):
    """An internal contract was violated; indicates a bug, not bad input."""
