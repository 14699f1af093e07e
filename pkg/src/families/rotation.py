"""Rotation-invariant solitons with null sigma curvatures."""

import math
from typing import Literal, Optional

import numpy as np

from ..reductions.ansatz import RotationAnsatz
from ..reductions.profiles import AnalyticProfile
from ..reductions.reduced import rotation_sigma_k
from ..tensor.sampling import domain_filter, sample_points
from ..types.models import FamilyMember, Signature
from ..utils.config import get_default_config
from ..utils.logger import get_logger
from .exceptions import FamilyInputError
from .ledger import settle_variants

logger = get_logger(__name__)

NULL_CHECK_RANGE = (0.1, 10.0)
NULL_CHECK_POINTS = 64


def null_sigma_max(ansatz: RotationAnsatz, r_values: np.ndarray) -> float:
    """Largest |sigma_s|, s = 1..n, of a rotation profile over r_values."""
    n = ansatz.n
    worst = 0.0
    for r in r_values:
        phi, dphi, ddphi = ansatz.phi.derivatives(float(r))
        for s in range(1, n + 1):
            worst = max(worst, abs(rotation_sigma_k(phi, dphi, ddphi, float(r), n, s)))
    return worst


def family_rotation_null_curvature(
    n: int,
    k: int,
    lam: float,
    case: Literal["a", "b"],
    c1: float = 0.0,
    c2: float = 1.0,
    c0: float = 1.0,
    signature: Optional[Signature] = None,
    seed: int = 0,
    count: Optional[int] = None,
) -> FamilyMember:
    """
    Null-curvature rotation soliton.

    Case a: phi = c2, f = A r + c1 (the Gaussian soliton).
    Case b: phi = c0 r on r > 0, f = A / r + c1.
    The printed coefficient A and its negation are both tested on sample
    points; the one annihilating the soliton residual is kept and recorded.

    Args:
        n: Dimension
        k: Curvature order
        lam: Soliton constant
        case: "a" or "b"
        c1: Additive constant of f
        c2: Constant conformal factor (case a)
        c0: Slope of the conformal factor (case b)
        signature: Background signature (default: Euclidean)
        seed: Sampling seed
        count: Sample points (default: configured sample count)

    Returns:
        FamilyMember with the sign ledger and the null-curvature check

    Raises:
        FamilyInputError: If c2 <= 0 (case a), c0 <= 0 (case b) or the case is unknown
        CatalogVerificationError: If neither sign variant vanishes
    """
    if n < 2 or not 1 <= k <= n:
        raise FamilyInputError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")
    sig = signature or Signature.euclidean(n)
    if sig.n != n:
        raise FamilyInputError(f"signature has {sig.n} entries, expected {n}")

    if case == "a":
        if not c2 > 0:
            raise FamilyInputError(f"c2 must be positive, got {c2}")
        phi = AnalyticProfile.constant(c2, name="phi_gauss")
        coefficient = (n - 1) * lam / c2**2
        interval = (-math.inf, math.inf)
        lo, hi = [-1.0] * n, [1.0] * n

        def potential(a: float) -> AnalyticProfile:
            return AnalyticProfile(lambda r: a * r + c1, name="f_gauss")

        written = "+(n-1)lambda r/c2^2"
        negated = "-(n-1)lambda r/c2^2"
        constants = {"c1": c1, "c2": c2}
    elif case == "b":
        if not c0 > 0:
            raise FamilyInputError(f"c0 must be positive, got {c0}")
        phi = AnalyticProfile(lambda r: c0 * r, name="phi_linear", interval=(0.0, math.inf))
        coefficient = -(n - 1) * lam / c0**2
        interval = (0.0, math.inf)
        lo, hi = [0.5] * n, [1.5] * n

        def potential(a: float) -> AnalyticProfile:
            return AnalyticProfile(lambda r: a / r + c1, name="f_linear", interval=interval)

        written = "-(n-1)lambda/(c0^2 r)"
        negated = "+(n-1)lambda/(c0^2 r)"
        constants = {"c0": c0, "c1": c1}
    else:
        raise FamilyInputError(f"unknown case {case!r}, expected 'a' or 'b'")

    variants = [
        (written, RotationAnsatz(sig, phi, potential(coefficient), interval, name=f"rot_{case}")),
        (negated, RotationAnsatz(sig, phi, potential(-coefficient), interval, name=f"rot_{case}")),
    ]
    accept = domain_filter(variants[0][1].phi_field(), variants[0][1].distance_to_boundary)
    points = sample_points(lo, hi, count=count, seed=seed, accept=accept)
    tag = "ROTATION_GAUSSIAN" if case == "a" else "ROTATION_LINEAR_PHI"
    ledger, ansatz, spec, residual = settle_variants(
        tag, variants, lambda a: a.to_soliton_spec(k, lam), points
    )

    r_values = np.linspace(*NULL_CHECK_RANGE, NULL_CHECK_POINTS)
    sigma_max = null_sigma_max(ansatz, r_values)
    if sigma_max > get_default_config().residual_tol:
        logger.warning(f"{tag}: sigma curvatures not null (max {sigma_max:.3e})")
    logger.info(f"{tag}: n={n}, k={k}, lambda={lam}, residual {residual:.3e}, kept {ledger.used}")
    return FamilyMember(
        tag=tag,
        constants={"n": n, "k": k, "lambda": lam, **constants},
        spec=spec,
        ansatz=ansatz,
        sign_variant=ledger,
        null_sigma_max=sigma_max,
    )
