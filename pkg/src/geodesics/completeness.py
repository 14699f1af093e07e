"""Numerical completeness evidence and the bounded conformal factor check."""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..tensor.exceptions import DomainError
from ..tensor.fields import ScalarField
from ..tensor.sampling import sample_points
from ..types.models import (
    BoundedFactorCheck,
    CompletenessReport,
    GeodesicState,
    InitialConditionVerdict,
    Signature,
    Trajectory,
)
from ..utils.config import NumericsConfig, get_default_config
from ..utils.logger import get_logger
from .engine import integrate
from .exceptions import GeodesicInputError

logger = get_logger(__name__)

BOX_SCALES = (1.0, 10.0, 100.0, 1000.0)
SUP_AGREEMENT = 0.01

COMPLETE = "complete_up_to_t_max"
INCONCLUSIVE = "inconclusive_incomplete_candidate"
BOUNDED_FACTOR = "complete_by_bounded_conformal_factor"


def bounded_factor_check(
    phi: ScalarField,
    sig: Signature,
    box: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
    seed: int = 0,
    count: Optional[int] = None,
) -> BoundedFactorCheck:
    """
    Estimate L = sup phi and test 0 < phi <= L on growing boxes.

    The box is scaled by 1, 10, 100 and 1000 about its center; each estimate
    is the running maximum over all boxes so far. phi counts as bounded when
    every sample is positive and the last two estimates agree within 1 %.
    The check only fires on a Riemannian signature.

    Args:
        phi: Conformal factor
        sig: Background signature
        box: (lo, hi) corners (default: [-1, 1]^n)
        seed: Sampling seed
        count: Points per box (default: configured sample count)

    Returns:
        BoundedFactorCheck
    """
    n = sig.n
    lo = np.asarray(box[0] if box else [-1.0] * n, dtype=float)
    hi = np.asarray(box[1] if box else [1.0] * n, dtype=float)
    center, half = (lo + hi) / 2.0, (hi - lo) / 2.0

    sup = 0.0
    min_phi = np.inf
    estimates: List[float] = []
    for scale in BOX_SCALES:
        for point in sample_points(center - scale * half, center + scale * half, count, seed):
            try:
                value = phi.value(point)
            except DomainError:
                value = 0.0
            sup = max(sup, abs(value))
            min_phi = min(min_phi, value)
        estimates.append(sup)

    settled = abs(estimates[-1] - estimates[-2]) <= SUP_AGREEMENT * estimates[-1]
    bounded = bool(min_phi > 0 and np.isfinite(sup) and settled)
    check = BoundedFactorCheck(
        applicable=sig.is_riemannian,
        sup_estimates=estimates,
        bound=estimates[-1],
        min_phi=float(min_phi),
        bounded=bounded,
        fires=sig.is_riemannian and bounded,
    )
    logger.debug(f"Bounded factor check: {check}")
    return check


def _both_ways(
    phi: ScalarField,
    sig: Signature,
    init: GeodesicState,
    t_max: float,
    tol: Optional[float],
    config: NumericsConfig,
) -> Tuple[Trajectory, Trajectory]:
    forward = integrate(phi, sig, init, t_max, tol=tol, config=config, samples=2)
    backward = integrate(phi, sig, init.reversed(), t_max, tol=tol, config=config, samples=2)
    return forward, backward


def completeness_probe(
    phi: ScalarField,
    sig: Signature,
    inits: Sequence[GeodesicState],
    t_max: float,
    tol: Optional[float] = None,
    box: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
    seed: int = 0,
    config: Optional[NumericsConfig] = None,
) -> CompletenessReport:
    """
    Integrate every initial condition forward and backward to t_max.

    Backward integration runs forward from the reversed velocity. Verdicts are
    evidence "up to t_max"; only the bounded conformal factor check, when it
    fires, yields an unqualified aggregate.

    Args:
        phi: Conformal factor
        sig: Background signature
        inits: Initial conditions
        t_max: Horizon in both directions
        tol: Relative tolerance override
        box: Box of the bounded factor check (default: [-1, 1]^n)
        seed: Sampling seed of the bounded factor check
        config: Numerical configuration (threads caps the worker pool)

    Returns:
        CompletenessReport

    Raises:
        GeodesicInputError: If inits is empty or an initial condition is invalid
    """
    if not inits:
        raise GeodesicInputError("completeness probe needs at least one initial condition")
    cfg = config or get_default_config()
    logger.info(f"Probing {len(inits)} initial conditions to t_max={t_max}...")

    verdicts: List[InitialConditionVerdict] = []
    with ThreadPoolExecutor(max_workers=cfg.threads, thread_name_prefix="probe") as executor:
        future_to_index = {
            executor.submit(_both_ways, phi, sig, init, t_max, tol, cfg): index
            for index, init in enumerate(inits)
        }
        for future in as_completed(future_to_index):
            index = future_to_index[future]
            forward, backward = future.result()
            init = inits[index]
            complete = (
                forward.termination == "reached_tmax" and backward.termination == "reached_tmax"
            )
            verdicts.append(
                InitialConditionVerdict(
                    index=index,
                    x0=list(init.x),
                    v0=list(init.v),
                    forward=forward.termination,
                    backward=backward.termination,
                    t_forward=forward.t_final - init.t,
                    t_backward=backward.t_final - init.t,
                    verdict=COMPLETE if complete else INCONCLUSIVE,
                )
            )
    verdicts.sort(key=lambda verdict: verdict.index)

    check = bounded_factor_check(phi, sig, box, seed=seed)
    all_complete = all(verdict.verdict == COMPLETE for verdict in verdicts)
    if check.fires:
        aggregate = BOUNDED_FACTOR
        if not all_complete:
            logger.warning("Bounded conformal factor holds but some geodesics stopped early")
    else:
        aggregate = COMPLETE if all_complete else INCONCLUSIVE

    logger.info(f"Completeness probe: {aggregate}")
    return CompletenessReport(
        t_max=t_max, verdicts=verdicts, aggregate=aggregate, bounded_check=check
    )
