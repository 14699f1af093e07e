"""Implicit-relation solver: antiderivative, inversion and certified tabulation."""

from .relation import ImplicitRelation, odd_root
from .solver import (
    antiderivative,
    admissible_xi_range,
    invert,
    build_profile,
    profile_from_table,
    read_profile_csv,
)
from .exceptions import (
    QuadratureError,
    QuadratureInputError,
    RelationDomainError,
    NonIntegrableEndpointError,
    OutOfDomainError,
)

__all__ = [
    "ImplicitRelation",
    "odd_root",
    "antiderivative",
    "admissible_xi_range",
    "invert",
    "build_profile",
    "profile_from_table",
    "read_profile_csv",
    "QuadratureError",
    "QuadratureInputError",
    "RelationDomainError",
    "NonIntegrableEndpointError",
    "OutOfDomainError",
]
