"""Shared exception types.

``DomainError`` marks inputs outside the convergence / validity domain of an
operation (CLI exit code 3); ``UsageError`` marks malformed input (exit 2).
"""


class DomainError(ValueError):
    """Input lies outside the stated convergence or validity domain."""


class UsageError(ValueError):
    """Malformed or inconsistent user input."""
