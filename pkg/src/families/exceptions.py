"""Custom exceptions for solution-family constructors."""


class FamilyError(Exception):
    """Base exception for solution-family errors."""

    pass


class FamilyInputError(FamilyError):
    """Raised when family constants violate their parameter domain."""

    pass


class FamilyDomainError(FamilyError):
    """Raised when a profile leaves the region where it defines a metric."""

    pass


class UnknownCatalogEntryError(FamilyError):
    """Raised when a catalog id is not known."""

    pass


class CatalogVerificationError(FamilyError):
    """Raised when no sign variant of a catalog entry annihilates the residual."""

    pass
