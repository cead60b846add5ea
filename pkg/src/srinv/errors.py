"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input data."""


class DomainError(ValueError):
    """A mathematical precondition of an operation is violated."""


class ResourceLimitError(RuntimeError):
    """The requested computation exceeds a configured size limit."""
