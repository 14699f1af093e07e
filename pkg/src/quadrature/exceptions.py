"""Custom exceptions for the implicit-relation solver."""

from typing import Optional, Tuple


class QuadratureError(Exception):
    """Base exception for implicit-relation errors."""

    pass


class QuadratureInputError(QuadratureError):
    """Raised when a relation or grid request is malformed."""

    pass


class RelationDomainError(QuadratureError):
    """Raised when the integrand is not finite and single-signed at the base point."""

    pass


class NonIntegrableEndpointError(QuadratureError):
    """Raised when the antiderivative diverges at a requested bracket end."""

    pass


class OutOfDomainError(QuadratureError):
    """Raised when xi lies outside the range reachable by the relation."""

    def __init__(self, message: str, admissible: Optional[Tuple[float, float]] = None):
        super().__init__(message)
        self.admissible = admissible
