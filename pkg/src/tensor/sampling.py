"""Quasi-random verification points."""

from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import qmc

from ..utils.config import get_default_config
from ..utils.logger import get_logger
from .exceptions import DimensionMismatchError, DomainError, SamplingError
from .fields import ScalarField

logger = get_logger(__name__)

Predicate = Callable[[np.ndarray], bool]


def sample_points(
    lo: Sequence[float],
    hi: Sequence[float],
    count: Optional[int] = None,
    seed: int = 0,
    accept: Optional[Predicate] = None,
    max_batches: int = 64,
) -> np.ndarray:
    """
    Draw admissible points from a scrambled Halton sequence over a box.

    Args:
        lo: Lower corner
        hi: Upper corner
        count: Number of points (default: configured sample count, 64)
        seed: Scrambling seed (same seed, same points)
        accept: Optional predicate; rejected points are skipped
        max_batches: Batches of ``count`` draws before giving up

    Returns:
        Array of shape (count, n)

    Raises:
        DimensionMismatchError: If the corners differ in length
        SamplingError: If too few points are accepted
    """
    lower = np.asarray(lo, dtype=float)
    upper = np.asarray(hi, dtype=float)
    if lower.shape != upper.shape or lower.ndim != 1:
        raise DimensionMismatchError(f"box corners differ: {lower.shape} vs {upper.shape}")
    if np.any(upper <= lower):
        raise SamplingError(f"empty sampling box lo={lower.tolist()} hi={upper.tolist()}")
    wanted = count if count is not None else get_default_config().sample_points

    sampler = qmc.Halton(d=lower.shape[0], scramble=True, seed=seed)
    accepted = []
    for _ in range(max_batches):
        batch = qmc.scale(sampler.random(wanted), lower, upper)
        for point in batch:
            if accept is None or accept(point):
                accepted.append(point)
                if len(accepted) == wanted:
                    return np.asarray(accepted)
    raise SamplingError(
        f"only {len(accepted)} of {wanted} points admissible in box "
        f"lo={lower.tolist()} hi={upper.tolist()}"
    )


def domain_filter(
    phi: ScalarField,
    distance: Optional[Callable[[np.ndarray], float]] = None,
    floor: Optional[float] = None,
    margin: Optional[float] = None,
) -> Predicate:
    """
    Predicate rejecting points where phi <= floor or that lie too close to a singular set.

    Args:
        phi: Conformal factor
        distance: Distance of a point to the ansatz singular set (optional)
        floor: phi rejection floor (default: 1e-12)
        margin: Minimal distance to the singular set (default: 1e-6)

    Returns:
        Point predicate
    """
    config = get_default_config()
    phi_floor = config.phi_floor if floor is None else floor
    keep_out = config.singular_margin if margin is None else margin

    def accept(point: np.ndarray) -> bool:
        if distance is not None and not distance(point) > keep_out:
            return False
        try:
            return phi.value(point) > phi_floor
        except DomainError:
            return False

    return accept
