"""First integrals of the light-like translation metric phi = 1/(1 + xi^(2 theta)).

With eps = (-1, 1, 1, ...) and xi = x1 + x2 the geodesic flow conserves
J_l = v_l (1 + xi^(2 theta))^2 for l >= 3 and K = (v1 + v2)(1 + xi^(2 theta))^2.
"""

from typing import Callable, Dict, Sequence

import numpy as np

from ..types.models import InvariantDriftReport, Trajectory
from ..utils.logger import get_logger
from .exceptions import GeodesicInputError

logger = get_logger(__name__)


def _check_theta(theta: int) -> None:
    if theta < 1:
        raise GeodesicInputError(f"theta must be a positive integer, got {theta}")


def lightlike_invariant_columns(
    theta: int,
) -> Callable[[np.ndarray, np.ndarray], Dict[str, np.ndarray]]:
    """
    Callback logging J3..Jn and K per sample (see ``integrate(first_integrals=...)``).

    Raises:
        GeodesicInputError: If theta < 1
    """
    _check_theta(theta)

    def columns(x: np.ndarray, v: np.ndarray) -> Dict[str, np.ndarray]:
        weight = (1.0 + (x[:, 0] + x[:, 1]) ** (2 * theta)) ** 2
        out = {f"J{l + 1}": v[:, l] * weight for l in range(2, x.shape[1])}
        out["K"] = (v[:, 0] + v[:, 1]) * weight
        return out

    return columns


def _drift(values: np.ndarray) -> float:
    start = float(values[0])
    return float(np.max(np.abs(values - start)) / max(abs(start), 1.0))


def first_integral_drift(traj: Trajectory, theta: int) -> InvariantDriftReport:
    """
    Max relative drift of J_l (l >= 3) and K along a trajectory.

    Drift is max |Q(t) - Q(0)| / max(|Q(0)|, 1).

    Args:
        traj: Trajectory of the light-like translation metric
        theta: Exponent parameter of the metric

    Returns:
        InvariantDriftReport

    Raises:
        GeodesicInputError: If theta < 1 or the trajectory has fewer than 3 coordinates
    """
    _check_theta(theta)
    if traj.x.shape[1] < 3:
        raise GeodesicInputError("first integrals need n >= 3")
    cols = lightlike_invariant_columns(theta)(np.asarray(traj.x), np.asarray(traj.v))
    k_values = cols.pop("K")
    j_drift = {name: _drift(values) for name, values in cols.items()}
    k_drift = _drift(k_values)
    report = InvariantDriftReport(
        theta=theta,
        j_drift=j_drift,
        k_drift=k_drift,
        max_drift=max([k_drift, *j_drift.values()]),
        k_initial=float(k_values[0]),
    )
    logger.info(f"First integrals (theta={theta}): max drift {report.max_drift:.3e}")
    return report


def reduced_lightlike_rhs(
    theta: int, k1: float, c: Sequence[float]
) -> Callable[[float, np.ndarray], np.ndarray]:
    """
    Reduced geodesic system on (x1, x2, v1, v2) once K = k1 and J_l = c_l are fixed.

    With A = 1 + xi^(2 theta):
        v1' = -2 theta xi^(2 theta - 1) (k1^2 + sum c_l^2) / A^5
        v2' = -2 theta xi^(2 theta - 1) (k1^2 - sum c_l^2) / A^5

    Args:
        theta: Exponent parameter
        k1: Value of K
        c: Values of J3..Jn

    Returns:
        Function (t, state) -> state'
    """
    _check_theta(theta)
    c_norm2 = float(np.sum(np.square(c)))

    def rhs(t: float, state: np.ndarray) -> np.ndarray:
        x1, x2, v1, v2 = state
        xi = x1 + x2
        scale = -2.0 * theta * xi ** (2 * theta - 1) / (1.0 + xi ** (2 * theta)) ** 5
        return np.array([v1, v2, scale * (k1**2 + c_norm2), scale * (k1**2 - c_norm2)])

    return rhs
