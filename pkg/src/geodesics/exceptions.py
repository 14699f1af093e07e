"""Custom exceptions for the geodesic engine."""


class GeodesicError(Exception):
    """Base exception for geodesic integration errors."""

    pass


class GeodesicInputError(GeodesicError):
    """Raised when tolerances, horizons or initial states are invalid."""

    pass
