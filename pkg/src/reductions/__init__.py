"""Translation and rotation symmetry reductions."""

from .constants import b_nk, c_nk
from .profiles import Profile, AnalyticProfile, TabulatedProfile
from .ansatz import TranslationAnsatz, RotationAnsatz, to_fraction
from .reduced import (
    translation_eigenpair,
    translation_sigma_k,
    translation_residuals,
    rotation_eigenpair,
    rotation_sigma_k,
    rotation_residuals,
    binomial_sigma_k,
    translation_hessian,
    rotation_hessian,
)
from .exceptions import ReductionError, ReductionInputError, ProfileDomainError

__all__ = [
    "b_nk",
    "c_nk",
    "Profile",
    "AnalyticProfile",
    "TabulatedProfile",
    "TranslationAnsatz",
    "RotationAnsatz",
    "to_fraction",
    "translation_eigenpair",
    "translation_sigma_k",
    "translation_residuals",
    "rotation_eigenpair",
    "rotation_sigma_k",
    "rotation_residuals",
    "binomial_sigma_k",
    "translation_hessian",
    "rotation_hessian",
    "ReductionError",
    "ReductionInputError",
    "ProfileDomainError",
]
