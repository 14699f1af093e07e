"""Custom exceptions for the command-line front-end."""


class CLIError(Exception):
    """Base exception for command-line errors."""

    pass


class ProblemSpecError(CLIError):
    """Raised when a problem spec cannot be read or fails validation."""

    pass
