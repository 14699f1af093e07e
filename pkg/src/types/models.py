"""Data models for soliton verification, profiles, geodesics and reports."""

import math
from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


def check_signature_entries(eps: List[int]) -> List[int]:
    """
    Validate a list of signature entries.

    Args:
        eps: Candidate signature entries

    Returns:
        The validated entries

    Raises:
        ValueError: If fewer than two entries or any entry is not +1/-1
    """
    if len(eps) < 2:
        raise ValueError(f"signature needs at least 2 entries, got {len(eps)}")
    bad = [e for e in eps if e not in (-1, 1)]
    if bad:
        raise ValueError(f"signature entries must be +1 or -1, got {bad}")
    return list(eps)


def coerce_signature_entries(value: Any) -> Any:
    """Reject booleans and non-unit entries before integer coercion."""
    if isinstance(value, (list, tuple)):
        for e in value:
            if isinstance(e, bool) or not isinstance(e, (int, float)) or e not in (-1, 1):
                raise ValueError(f"signature entries must be +1 or -1, got {e!r}")
        return [int(e) for e in value]
    return value


# ============================================================================
# Geometry
# ============================================================================


class Signature(BaseModel):
    """Diagonal +1/-1 pattern of the flat background metric."""

    model_config = ConfigDict(frozen=True)

    eps: List[int] = Field(description="Signature entries, each +1 or -1")

    @field_validator("eps", mode="before")
    @classmethod
    def _strict_entries(cls, value: Any) -> Any:
        return coerce_signature_entries(value)

    @field_validator("eps")
    @classmethod
    def _validate_eps(cls, value: List[int]) -> List[int]:
        return check_signature_entries(value)

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.eps, dtype=float)

    @property
    def is_riemannian(self) -> bool:
        return all(e == 1 for e in self.eps)

    @property
    def is_lorentzian(self) -> bool:
        return sum(1 for e in self.eps if e == -1) == 1

    @classmethod
    def euclidean(cls, n: int) -> "Signature":
        return cls(eps=[1] * n)

    @classmethod
    def lorentzian(cls, n: int) -> "Signature":
        """Signature (-1, 1, ..., 1)."""
        return cls(eps=[-1] + [1] * (n - 1))


class CurvaturePack(BaseModel):
    """Curvature quantities of the conformal metric at one point."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x: np.ndarray = Field(description="Evaluation point")
    ricci: np.ndarray = Field(description="Ricci tensor (n x n, symmetric)")
    scalar: float = Field(description="Scalar curvature")
    schouten: np.ndarray = Field(description="Schouten tensor (n x n, symmetric)")
    endo: np.ndarray = Field(description="Schouten endomorphism with first index raised")
    sigma: np.ndarray = Field(description="sigma_1 ... sigma_n of the endomorphism")


class ReducedResidual(BaseModel):
    """Residuals of the reduced potential (r1) and curvature (r2) equations."""

    model_config = ConfigDict(frozen=True)

    r1: float = Field(description="Potential equation residual")
    r2: float = Field(description="Curvature equation residual")

    @model_validator(mode="after")
    def _finite(self) -> "ReducedResidual":
        if not (math.isfinite(self.r1) and math.isfinite(self.r2)):
            raise ValueError(f"reduced residuals must be finite, got ({self.r1}, {self.r2})")
        return self


# ============================================================================
# Families and catalog
# ============================================================================


class FamilyTag(str, Enum):
    """Solution family identifiers."""

    LIGHTLIKE_STEADY = "LIGHTLIKE_STEADY"
    TRANSLATION_PHI_CONST = "TRANSLATION_PHI_CONST"
    TRANSLATION_N_NE_2K = "TRANSLATION_N_NE_2K"
    TRANSLATION_N_EQ_2K = "TRANSLATION_N_EQ_2K"
    ROTATION_GAUSSIAN = "ROTATION_GAUSSIAN"
    ROTATION_LINEAR_PHI = "ROTATION_LINEAR_PHI"
    CATALOG = "CATALOG"


class FamilyParams(BaseModel):
    """Family tag plus its integration constants."""

    model_config = ConfigDict(extra="forbid")

    tag: FamilyTag = Field(description="Family identifier")
    params: Dict[str, Union[float, int, str]] = Field(
        default_factory=dict,
        description="Constants c, d, c0..c4, b, theta, lambda and catalog id as applicable",
    )

    def number(self, key: str, default: Optional[float] = None) -> float:
        """
        Fetch a numeric constant.

        Args:
            key: Constant name
            default: Value when absent (None makes the constant required)

        Returns:
            The constant as float

        Raises:
            ValueError: If required and absent, or not numeric
        """
        if key not in self.params:
            if default is None:
                raise ValueError(f"family {self.tag.value} requires constant '{key}'")
            return float(default)
        value = self.params[key]
        if isinstance(value, str):
            raise ValueError(f"constant '{key}' must be numeric, got {value!r}")
        return float(value)


class SignVariantResult(BaseModel):
    """Residual of one sign/normalization variant of a family."""

    label: str = Field(description="Variant label")
    max_residual: float = Field(description="Max-abs soliton residual over the sample points")
    vanishes: bool = Field(description="Residual within tolerance")


class SignLedgerEntry(BaseModel):
    """Which sign/normalization variant of a printed formula annihilates the residual."""

    entry_id: str = Field(description="Catalog or family identifier")
    written: str = Field(description="Variant as printed")
    used: str = Field(description="Variant kept (first vanishing one, printed form first)")
    matches_written: bool = Field(description="Whether the printed variant was kept")
    candidates: List[SignVariantResult] = Field(description="All tried variants")


class CatalogEntry(BaseModel):
    """A fully specified, verified catalog soliton."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    id: str = Field(description="Catalog identifier")
    description: str = Field(description="Human-readable description")
    params: Dict[str, float] = Field(description="Constants the entry was built with")
    spec: Any = Field(description="SolitonSpec of the verified variant")
    ansatz: Any = Field(default=None, description="Translation/rotation ansatz when available")
    expected_lambda: float = Field(description="Expected soliton constant")
    expected_lambda_exact: str = Field(description="Expected soliton constant as exact rational")
    k_range: Tuple[int, int] = Field(description="Admissible k values (inclusive)")
    box_lo: List[float] = Field(description="Domain box lower corner")
    box_hi: List[float] = Field(description="Domain box upper corner")
    sign_variant: SignLedgerEntry = Field(description="Verified sign/normalization variant")
    max_residual: float = Field(description="Max-abs soliton residual at build time")
    sample_count: int = Field(description="Points used for build-time verification")
    accept: Any = Field(default=None, exclude=True, description="Domain predicate for sampling")


class FamilyMember(BaseModel):
    """A closed-form family member realized as a full soliton candidate."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    tag: str = Field(description="Family identifier")
    constants: Dict[str, float] = Field(description="Constants the member was built with")
    spec: Any = Field(description="SolitonSpec of the kept variant")
    ansatz: Any = Field(description="Translation/rotation ansatz of the kept variant")
    sign_variant: Optional[SignLedgerEntry] = Field(
        default=None, description="Sign ledger when the printed formula was tested"
    )
    null_sigma_max: Optional[float] = Field(
        default=None, description="Largest |sigma_s| over the check grid (null-curvature families)"
    )


class ProfileTable(BaseModel):
    """Tabulated profile phi(xi) with derivative estimates and its certificate."""

    model_config = ConfigDict(frozen=True)

    xi: List[float] = Field(description="Uniform xi grid")
    phi: List[float] = Field(description="phi values")
    dphi: List[float] = Field(description="First derivative estimates")
    ddphi: List[float] = Field(description="Second derivative estimates")
    residual: List[float] = Field(description="|ODE residual| per grid point")
    certified_residual: float = Field(description="Max |ODE residual| on the grid")
    tolerance: float = Field(description="Certification tolerance")
    certified: bool = Field(description="certified_residual <= tolerance")
    round_trip_error: float = Field(description="Max |antiderivative(phi) - rhs(xi)| on the grid")
    tag: str = Field(description="Relation identifier")
    constants: Dict[str, float] = Field(default_factory=dict, description="Family constants")
    admissible_xi: Tuple[float, float] = Field(description="Admissible xi interval")

    @model_validator(mode="after")
    def _consistent(self) -> "ProfileTable":
        size = len(self.xi)
        for name in ("phi", "dphi", "ddphi", "residual"):
            if len(getattr(self, name)) != size:
                raise ValueError(f"column '{name}' length differs from xi grid ({size})")
        if any(not v > 0 for v in self.phi):
            raise ValueError("profile table requires phi > 0 on the grid")
        return self

    def to_dataframe(self) -> pd.DataFrame:
        """CSV layout: xi, phi, dphi, ddphi, residual."""
        return pd.DataFrame(
            {
                "xi": self.xi,
                "phi": self.phi,
                "dphi": self.dphi,
                "ddphi": self.ddphi,
                "residual": self.residual,
            }
        )


# ============================================================================
# Geodesics
# ============================================================================


TerminationReason = Literal["reached_tmax", "blow_up", "step_collapse", "left_domain"]


class GeodesicState(BaseModel):
    """Position and velocity at an affine parameter value."""

    model_config = ConfigDict(frozen=True)

    t: float = Field(default=0.0, description="Affine parameter")
    x: List[float] = Field(description="Position")
    v: List[float] = Field(description="Velocity")

    @model_validator(mode="after")
    def _check(self) -> "GeodesicState":
        if len(self.x) != len(self.v):
            raise ValueError(f"x and v lengths differ ({len(self.x)} vs {len(self.v)})")
        values = [self.t, *self.x, *self.v]
        if not all(math.isfinite(value) for value in values):
            raise ValueError("geodesic state entries must be finite")
        return self

    def reversed(self) -> "GeodesicState":
        """Same point with the velocity flipped."""
        return GeodesicState(t=self.t, x=list(self.x), v=[-value for value in self.v])


class Trajectory(BaseModel):
    """Sampled geodesic with termination reason and first-integral logs."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    t: np.ndarray = Field(description="Sample parameters, strictly increasing")
    x: np.ndarray = Field(description="Positions, shape (samples, n)")
    v: np.ndarray = Field(description="Velocities, shape (samples, n)")
    speed: np.ndarray = Field(description="g(v, v) per sample")
    termination: TerminationReason = Field(description="Why integration stopped")
    t_final: float = Field(description="Last accepted parameter value")
    steps: int = Field(description="Accepted integrator steps")
    invariants: Dict[str, np.ndarray] = Field(
        default_factory=dict, description="Extra first-integral columns (J3..Jn, K)"
    )

    @model_validator(mode="after")
    def _check(self) -> "Trajectory":
        if self.t.size > 1 and not np.all(np.diff(self.t) > 0):
            raise ValueError("trajectory samples must be strictly increasing in t")
        for array in (self.t, self.x, self.v, self.speed, *self.invariants.values()):
            array.setflags(write=False)
        return self

    @property
    def final_state(self) -> GeodesicState:
        return GeodesicState(t=float(self.t[-1]), x=self.x[-1].tolist(), v=self.v[-1].tolist())

    def to_dataframe(self) -> pd.DataFrame:
        """CSV layout: t, x1..xn, v1..vn, speed, then invariant columns."""
        n = self.x.shape[1]
        columns: Dict[str, Any] = {"t": self.t}
        for i in range(n):
            columns[f"x{i + 1}"] = self.x[:, i]
        for i in range(n):
            columns[f"v{i + 1}"] = self.v[:, i]
        columns["speed"] = self.speed
        for name, values in self.invariants.items():
            columns[name] = values
        return pd.DataFrame(columns)


class InvariantDriftReport(BaseModel):
    """Max relative drift of the translation first integrals along a trajectory."""

    theta: int = Field(description="Exponent parameter of the metric")
    j_drift: Dict[str, float] = Field(description="Drift of J_l for l >= 3")
    k_drift: float = Field(description="Drift of K")
    max_drift: float = Field(description="Largest drift overall")
    k_initial: float = Field(description="K at the first sample")


class InitialConditionVerdict(BaseModel):
    """Forward/backward outcome for one initial condition."""

    index: int = Field(description="Position in the initial-condition set")
    x0: List[float] = Field(description="Initial position")
    v0: List[float] = Field(description="Initial velocity")
    forward: TerminationReason = Field(description="Forward termination")
    backward: TerminationReason = Field(description="Backward termination")
    t_forward: float = Field(description="Parameter reached forward")
    t_backward: float = Field(description="Parameter reached backward (as a positive value)")
    verdict: str = Field(
        description="complete_up_to_t_max or inconclusive_incomplete_candidate"
    )


class BoundedFactorCheck(BaseModel):
    """Bounded conformal factor sufficient condition for completeness."""

    applicable: bool = Field(description="Signature is Riemannian")
    sup_estimates: List[float] = Field(description="sup |phi| on boxes scaled by 1, 10, 100, 1000")
    bound: float = Field(description="Estimate L of sup |phi|")
    min_phi: float = Field(description="Smallest sampled phi")
    bounded: bool = Field(description="0 < phi <= L on every scaled box")
    fires: bool = Field(description="applicable and bounded")


class CompletenessReport(BaseModel):
    """Numerical evidence on geodesic completeness."""

    t_max: float = Field(description="Integration horizon in both directions")
    verdicts: List[InitialConditionVerdict] = Field(description="Per initial condition")
    aggregate: str = Field(description="Aggregate verdict")
    bounded_check: BoundedFactorCheck = Field(description="Bounded conformal factor check")


# ============================================================================
# CLI problem specs and reports
# ============================================================================


class AnsatzSpec(BaseModel):
    """Ansatz selection in a problem spec."""

    model_config = ConfigDict(extra="forbid")

    type: Literal["translation", "rotation"] = Field(description="Ansatz kind")
    alpha: Optional[List[Union[float, int, str]]] = Field(
        default=None, description="Translation direction (rationals as strings allowed)"
    )
    profile: str = Field(description="Catalog id or CSV table file")


class GeodesicInit(BaseModel):
    """Initial position and velocity."""

    model_config = ConfigDict(extra="forbid")

    x: List[float] = Field(description="Initial position")
    v: List[float] = Field(description="Initial velocity")


class GeodesicSpec(BaseModel):
    """Geodesic section of a problem spec."""

    model_config = ConfigDict(extra="forbid")

    init: Optional[GeodesicInit] = Field(default=None, description="Single initial condition")
    inits: Optional[List[GeodesicInit]] = Field(
        default=None, description="Probe initial conditions"
    )
    t_max: float = Field(default=100.0, gt=0, description="Integration horizon")
    tol: Optional[float] = Field(default=None, gt=0, description="Relative tolerance override")


class SampleBox(BaseModel):
    """Axis-aligned sampling box."""

    model_config = ConfigDict(extra="forbid")

    lo: List[float] = Field(description="Lower corner")
    hi: List[float] = Field(description="Upper corner")

    @model_validator(mode="after")
    def _ordered(self) -> "SampleBox":
        if len(self.lo) != len(self.hi):
            raise ValueError("sample_box corners differ in length")
        if any(not b > a for a, b in zip(self.lo, self.hi)):
            raise ValueError("sample_box requires lo < hi in every coordinate")
        return self


class ProblemSpec(BaseModel):
    """Command input document."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    n: int = Field(ge=2, description="Dimension")
    k: int = Field(ge=1, description="Curvature order")
    lambda_: float = Field(default=0.0, alias="lambda", description="Soliton constant")
    signature: List[int] = Field(description="Signature entries")
    ansatz: Optional[AnsatzSpec] = Field(default=None, description="Ansatz selection")
    family: Optional[FamilyParams] = Field(default=None, description="Family selection")
    geodesic: Optional[GeodesicSpec] = Field(default=None, description="Geodesic setup")
    sample_box: Optional[SampleBox] = Field(default=None, description="Sampling box")
    seed: Optional[int] = Field(default=None, description="Sampling seed (default 0)")

    @field_validator("signature", mode="before")
    @classmethod
    def _signature_entries(cls, value: Any) -> Any:
        if isinstance(value, list):
            return coerce_signature_entries(value)
        return value

    @field_validator("signature")
    @classmethod
    def _signature_length(cls, value: List[int]) -> List[int]:
        return check_signature_entries(value)

    @model_validator(mode="after")
    def _dimensions(self) -> "ProblemSpec":
        if len(self.signature) != self.n:
            raise ValueError(f"signature has {len(self.signature)} entries but n = {self.n}")
        if self.k > self.n:
            raise ValueError(f"k must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.sample_box is not None and len(self.sample_box.lo) != self.n:
            raise ValueError("sample_box corners must have n entries")
        return self

    @property
    def sig(self) -> Signature:
        return Signature(eps=self.signature)


class VerifyReport(BaseModel):
    """Result of the verify command."""

    command: str = "verify"
    source: str = Field(description="Catalog id or table file")
    n: int
    k: int
    lambda_: float = Field(serialization_alias="lambda")
    expected_lambda: Optional[str] = Field(default=None, description="Exact expected constant")
    max_residual: float = Field(description="Max-abs soliton residual over sample points")
    points: int = Field(description="Sample point count")
    grid: Optional[Dict[str, Any]] = Field(
        default=None, description="Reduced-residual grid summary"
    )
    tolerance: float
    passed: bool = Field(serialization_alias="pass")
    sign_variant_used: Optional[SignLedgerEntry] = None


class CurvatureReport(BaseModel):
    """Curvature packs at sample points."""

    command: str = "curvature"
    source: str
    points: List[Dict[str, Any]] = Field(description="Per point: x, scalar, sigma, ricci, endo")


class ReduceReport(BaseModel):
    """Reduced residuals on a grid."""

    command: str = "reduce"
    source: str
    ansatz: str
    grid: List[float]
    r1: List[float]
    r2: List[float]
    sigma_k: List[float]
    max_abs_r1: float
    max_abs_r2: float
    tolerance: float
    passed: bool = Field(serialization_alias="pass")


class FamilyCertificate(BaseModel):
    """Certificate written next to a family table."""

    command: str
    tag: str
    constants: Dict[str, Any]
    domain: Dict[str, Any]
    certified_residual: float
    round_trip_error: Optional[float] = None
    tolerance: float
    certified: bool
    table_file: Optional[str] = None
    sign_variant_used: Optional[SignLedgerEntry] = None


class GeodesicReport(BaseModel):
    """Metadata of a single integrated geodesic."""

    command: str = "geodesic"
    source: str
    termination: TerminationReason
    t_final: float
    steps: int
    samples: int
    speed_drift: float
    invariant_drift: Optional[InvariantDriftReport] = None
    trajectory_file: Optional[str] = None
