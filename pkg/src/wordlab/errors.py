"""Errors shared across the library."""


class DomainError(ValueError):
    """An argument falls outside an operation's mathematical domain."""


class ResourceError(RuntimeError):
    """An operation would exceed its configured enumeration budget."""
