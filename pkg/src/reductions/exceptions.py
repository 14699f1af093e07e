"""Custom exceptions for the symmetry reductions."""

from ..tensor.exceptions import DomainError


class ReductionError(Exception):
    """Base exception for reduction errors."""

    pass


class ReductionInputError(ReductionError):
    """Raised when n, k or the ansatz direction are outside their admissible range."""

    pass


class ProfileDomainError(ReductionError, DomainError):
    """Raised when a profile is evaluated outside its interval or with a non-positive phi."""

    pass
