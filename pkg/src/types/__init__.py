"""Type definitions for yamabe-lab."""

from .models import (
    Signature,
    CurvaturePack,
    ReducedResidual,
    FamilyTag,
    FamilyParams,
    SignVariantResult,
    SignLedgerEntry,
    CatalogEntry,
    FamilyMember,
    ProfileTable,
    GeodesicState,
    Trajectory,
    TerminationReason,
    InvariantDriftReport,
    InitialConditionVerdict,
    BoundedFactorCheck,
    CompletenessReport,
    ProblemSpec,
)

__all__ = [
    "Signature",
    "CurvaturePack",
    "ReducedResidual",
    "FamilyTag",
    "FamilyParams",
    "SignVariantResult",
    "SignLedgerEntry",
    "CatalogEntry",
    "FamilyMember",
    "ProfileTable",
    "GeodesicState",
    "Trajectory",
    "TerminationReason",
    "InvariantDriftReport",
    "InitialConditionVerdict",
    "BoundedFactorCheck",
    "CompletenessReport",
    "ProblemSpec",
]
