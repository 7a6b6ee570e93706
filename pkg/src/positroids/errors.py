"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is well-formed but outside the domain of the operation."""


class ResourceLimitError(RuntimeError):
    """A request exceeds one of the configured size bounds."""
