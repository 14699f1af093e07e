"""Curvature engine for conformal metrics delta / phi^2."""

from .jets import Jet, power, exp, log, sqrt, sin, cos, lift
from .fields import ScalarField, SolitonSpec, central_differences, as_point
from .curvature import (
    conformal_christoffel,
    hessian_conformal,
    ricci_conformal,
    scalar_conformal,
    schouten_endomorphism,
    sigma_all,
    characteristic_coefficients,
    curvature_pack,
    soliton_residual,
    max_soliton_residual,
)
from .sampling import sample_points, domain_filter
from .exceptions import TensorCoreError, DomainError, DimensionMismatchError, SamplingError

__all__ = [
    "Jet",
    "power",
    "exp",
    "log",
    "sqrt",
    "sin",
    "cos",
    "lift",
    "ScalarField",
    "SolitonSpec",
    "central_differences",
    "as_point",
    "conformal_christoffel",
    "hessian_conformal",
    "ricci_conformal",
    "scalar_conformal",
    "schouten_endomorphism",
    "sigma_all",
    "characteristic_coefficients",
    "curvature_pack",
    "soliton_residual",
    "max_soliton_residual",
    "sample_points",
    "domain_filter",
    "TensorCoreError",
    "DomainError",
    "DimensionMismatchError",
    "SamplingError",
]
