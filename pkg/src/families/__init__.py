"""Closed-form and implicit solution families plus the verified catalog."""

from .potential import PotentialProfile, potential_from_phi
from .translation import (
    p_constant,
    family_translation_n_ne_2k,
    family_translation_n_eq_2k,
    family_lightlike_steady,
    family_translation_phi_const,
)
from .rotation import family_rotation_null_curvature, null_sigma_max
from .catalog import (
    catalog,
    catalog_ids,
    describe_catalog,
    catalog_metric,
    is_catalog_id,
    canonical_id,
    catalog_defaults,
)
from .ledger import settle_variants
from .tables import reduced_table
from .exceptions import (
    FamilyError,
    FamilyInputError,
    FamilyDomainError,
    UnknownCatalogEntryError,
    CatalogVerificationError,
)

__all__ = [
    "PotentialProfile",
    "potential_from_phi",
    "p_constant",
    "family_translation_n_ne_2k",
    "family_translation_n_eq_2k",
    "family_lightlike_steady",
    "family_translation_phi_const",
    "family_rotation_null_curvature",
    "null_sigma_max",
    "catalog",
    "catalog_ids",
    "describe_catalog",
    "catalog_metric",
    "is_catalog_id",
    "canonical_id",
    "catalog_defaults",
    "settle_variants",
    "reduced_table",
    "FamilyError",
    "FamilyInputError",
    "FamilyDomainError",
    "UnknownCatalogEntryError",
    "CatalogVerificationError",
]
