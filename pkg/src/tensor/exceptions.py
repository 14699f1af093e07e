"""Custom exceptions for curvature evaluation."""


class TensorCoreError(Exception):
    """Base exception for curvature evaluation errors."""

    pass


class DomainError(TensorCoreError):
    """Raised when a field leaves its domain (non-positive conformal factor, bad power base)."""

    pass


class DimensionMismatchError(TensorCoreError):
    """Raised when points, fields and signature disagree on the dimension."""

    pass


class SamplingError(TensorCoreError):
    """Raised when too few admissible sample points can be drawn from a box."""

    pass
