"""Geodesic flow of conformal metrics g = delta / phi^2 in any signature."""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.integrate import RK45

from ..tensor.exceptions import DomainError
from ..tensor.fields import ScalarField, as_point
from ..types.models import GeodesicState, Signature, TerminationReason, Trajectory
from ..utils.config import NumericsConfig, get_default_config
from ..utils.logger import get_logger
from .exceptions import GeodesicInputError

logger = get_logger(__name__)

# Extra per-sample columns computed from (x, v) sample arrays.
FirstIntegrals = Callable[[np.ndarray, np.ndarray], Dict[str, np.ndarray]]


def _acceleration(
    phi: ScalarField, eps: np.ndarray, x: np.ndarray, v: np.ndarray
) -> np.ndarray:
    value, grad = phi.value_and_gradient(x)
    if not value > 0:
        raise DomainError(f"conformal factor {value} <= 0 at x={x.tolist()}")
    along = float(grad @ v)
    norm = float(eps @ (v * v))
    return (2.0 * along * v - eps * grad * norm) / value


def geodesic_rhs(
    phi: ScalarField, sig: Signature, s: GeodesicState
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Right-hand side of the geodesic equations.

    x' = v and v_l' = (2 (grad phi . v) v_l - eps_l phi_l sum_i eps_i v_i^2) / phi.

    Args:
        phi: Conformal factor
        sig: Background signature
        s: Current state

    Returns:
        (x', v')

    Raises:
        DomainError: If phi <= 0 at s.x
        DimensionMismatchError: If s, phi and sig disagree on the dimension
    """
    x = as_point(s.x, sig.n)
    v = as_point(s.v, sig.n)
    return v.copy(), _acceleration(phi, sig.array, x, v)


def _speed(phi: ScalarField, eps: np.ndarray, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    speed = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        try:
            value = phi.value(x[i])
        except DomainError:
            speed[i] = np.nan
            continue
        speed[i] = float(eps @ (v[i] * v[i])) / value**2
    return speed


def _sample(
    segments: List[Tuple[float, float, Callable[[float], np.ndarray]]],
    t0: float,
    y0: np.ndarray,
    t_final: float,
    samples: int,
) -> Tuple[np.ndarray, np.ndarray]:
    if not segments:
        return np.array([t0]), y0[np.newaxis, :].copy()
    ts = np.linspace(t0, t_final, samples)
    ends = np.array([end for _, end, _ in segments])
    ys = np.empty((samples, y0.size))
    for i, t in enumerate(ts):
        j = min(int(np.searchsorted(ends, t)), len(segments) - 1)
        ys[i] = segments[j][2](t)
    ys[0] = y0
    return ts, ys


def integrate(
    phi: ScalarField,
    sig: Signature,
    init: GeodesicState,
    t_max: float,
    tol: Optional[float] = None,
    config: Optional[NumericsConfig] = None,
    samples: Optional[int] = None,
    first_integrals: Optional[FirstIntegrals] = None,
) -> Trajectory:
    """
    Integrate a geodesic from init over [init.t, init.t + t_max].

    Uses the Dormand-Prince 5(4) pair stepped one accepted step at a time, so
    every termination reason is observed:

    - left_domain: phi <= 0 inside a step
    - blow_up: non-finite state or |x|, |v| above the configured threshold
    - step_collapse: the step fell below step_floor * max(1, |t|) or the step budget ran out
    - reached_tmax: the horizon was reached

    Args:
        phi: Conformal factor
        sig: Background signature
        init: Initial state (phi must be positive at init.x)
        t_max: Length of the parameter interval (> 0)
        tol: Relative tolerance (default: configured ode_rtol)
        config: Numerical configuration
        samples: Uniform samples stored (default: configured trajectory_samples)
        first_integrals: Extra columns logged per sample

    Returns:
        Trajectory sampled uniformly up to the last accepted parameter value

    Raises:
        GeodesicInputError: If tol or t_max is not positive, or phi <= 0 at init.x
    """
    cfg = config or get_default_config()
    rtol = cfg.ode_rtol if tol is None else tol
    if not rtol > 0:
        raise GeodesicInputError(f"tolerance must be positive, got {tol}")
    if not t_max > 0:
        raise GeodesicInputError(f"t_max must be positive, got {t_max}")
    n = sig.n
    eps = sig.array
    x0 = as_point(init.x, n)
    v0 = as_point(init.v, n)
    try:
        phi.value(x0)
    except DomainError as e:
        raise GeodesicInputError(f"initial point outside the domain: {e}") from e

    def fun(t: float, y: np.ndarray) -> np.ndarray:
        x, v = y[:n], y[n:]
        return np.concatenate([v, _acceleration(phi, eps, x, v)])

    y0 = np.concatenate([x0, v0])
    t0 = float(init.t)
    segments: List[Tuple[float, float, Callable[[float], np.ndarray]]] = []
    termination: TerminationReason = "reached_tmax"
    steps = 0
    try:
        # the initial step selection already probes a trial point
        solver: Optional[RK45] = RK45(fun, t0, y0, t0 + t_max, rtol=rtol, atol=cfg.ode_atol)
    except DomainError as e:
        logger.debug(f"Trial step left the domain: {e}")
        solver = None
        termination = "left_domain"

    while solver is not None and solver.status == "running":
        try:
            message = solver.step()
        except DomainError as e:
            logger.debug(f"Geodesic left the domain at t={solver.t}: {e}")
            termination = "left_domain"
            break
        if solver.status == "failed":
            logger.debug(f"Integrator failed at t={solver.t}: {message}")
            termination = "step_collapse"
            break
        y = solver.y
        if not np.all(np.isfinite(y)):
            termination = "blow_up"
            break
        steps += 1
        segments.append((solver.t_old, solver.t, solver.dense_output()))
        if np.max(np.abs(y[:n])) > cfg.blowup or np.max(np.abs(y[n:])) > cfg.blowup:
            termination = "blow_up"
            break
        if solver.status == "running":
            if solver.step_size < cfg.step_floor * max(1.0, abs(solver.t)):
                termination = "step_collapse"
                break
            if steps >= cfg.max_steps:
                logger.warning(f"Step budget {cfg.max_steps} exhausted at t={solver.t}")
                termination = "step_collapse"
                break

    t_final = segments[-1][1] if segments else t0
    ts, ys = _sample(segments, t0, y0, t_final, samples or cfg.trajectory_samples)
    xs, vs = ys[:, :n], ys[:, n:]
    extra = first_integrals(xs, vs) if first_integrals is not None else {}
    logger.info(
        f"Geodesic: {termination} at t={t_final - t0:.6g} after {steps} steps "
        f"(x0={x0.tolist()}, v0={v0.tolist()})"
    )
    return Trajectory(
        t=ts,
        x=xs,
        v=vs,
        speed=_speed(phi, eps, xs, vs),
        termination=termination,
        t_final=t_final,
        steps=steps,
        invariants=extra,
    )


def speed_drift(traj: Trajectory) -> float:
    """
    Max relative drift of g(v, v) from its first sample.

    Null geodesics are measured against 1 instead of |g(v0, v0)|.
    """
    speed = traj.speed[np.isfinite(traj.speed)]
    if speed.size == 0:
        return float("nan")
    scale = abs(float(speed[0])) or 1.0
    return float(np.max(np.abs(speed - speed[0])) / scale)
