"""Geodesic integration, first integrals and completeness probing."""

from .completeness import (
    BOUNDED_FACTOR,
    COMPLETE,
    INCONCLUSIVE,
    bounded_factor_check,
    completeness_probe,
)
from .engine import geodesic_rhs, integrate, speed_drift
from .exceptions import GeodesicError, GeodesicInputError
from .invariants import first_integral_drift, lightlike_invariant_columns, reduced_lightlike_rhs

__all__ = [
    "geodesic_rhs",
    "integrate",
    "speed_drift",
    "first_integral_drift",
    "lightlike_invariant_columns",
    "reduced_lightlike_rhs",
    "completeness_probe",
    "bounded_factor_check",
    "COMPLETE",
    "INCONCLUSIVE",
    "BOUNDED_FACTOR",
    "GeodesicError",
    "GeodesicInputError",
]
