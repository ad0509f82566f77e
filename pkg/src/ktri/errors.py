"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input violates a documented precondition (bad polygon, bad path, ...)."""


class GuardExceeded(DomainError):
    """An enumeration was refused because it exceeds the configured size guard."""


class StructuralError(RuntimeError):
    """An internal consistency check failed.  This signals a bug, not bad input."""
