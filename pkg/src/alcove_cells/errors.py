"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An input violates a documented precondition or domain restriction."""


class ResourceLimitError(RuntimeError):
    """A configured search bound or enumeration cap was exceeded."""


class InvariantViolationError(RuntimeError):
    """A machine-checked internal invariant failed; indicates a bug, not bad input."""
