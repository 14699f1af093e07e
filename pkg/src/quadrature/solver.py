"""Antiderivative, inversion and tabulation of implicit relations."""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from scipy.integrate import IntegrationWarning, quad
from scipy.optimize import brentq
from scipy.signal import savgol_filter

from ..reductions.profiles import TabulatedProfile
from ..types.models import ProfileTable
from ..utils.logger import get_logger
from .exceptions import (
    NonIntegrableEndpointError,
    OutOfDomainError,
    QuadratureError,
    QuadratureInputError,
)
from .relation import ImplicitRelation

logger = get_logger(__name__)

SAVGOL_WINDOW = 7
SAVGOL_ORDER = 5
LIMIT_TOL = 1e-10
DIVERGENCE_RATIO = 0.999

_LO, _HI = 0, 1


def _quad(rel: ImplicitRelation, a: float, b: float) -> float:
    """
    Integral of the relation integrand over [a, b].

    Raises:
        QuadratureError: If the integral is not finite
    """
    if a == b:
        return 0.0
    cfg = rel.config
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, error = quad(
            rel.integrand,
            a,
            b,
            epsabs=cfg.quad_epsabs,
            epsrel=cfg.quad_epsrel,
            limit=cfg.quad_limit,
        )
    for w in caught:
        logger.debug(f"{rel.tag}: quad on [{a}, {b}] warned: {w.message} (error ~{error:.2e})")
    if not math.isfinite(value):
        raise QuadratureError(f"{rel.tag}: integral over [{a}, {b}] is {value}")
    return float(value)


def _panel_point(rel: ImplicitRelation, side: int, level: int) -> float:
    end = rel.bracket[side]
    return rel.phi0 + (end - rel.phi0) * (1.0 - 2.0**-level)


def _end_limit(rel: ImplicitRelation, side: int) -> Tuple[float, bool]:
    """
    Limit of the antiderivative at a bracket end.

    Geometric panels phi0 + (end - phi0)(1 - 2^-L) approach the end; once the
    panel integrals decay geometrically the remaining tail is extrapolated.

    Returns:
        (limit, finite); an infinite limit carries the sign of the divergence
    """
    key = "lo" if side == _LO else "hi"
    if key in rel._limits:
        return rel._limits[key]

    end = rel.bracket[side]
    if not rel.singular_ends[side]:
        result = (_quad(rel, rel.phi0, end), True)
        rel._limits[key] = result
        return result

    acc = 0.0
    prev = rel.phi0
    last_panel: Optional[float] = None
    last_estimate: Optional[float] = None
    ratio = 0.0
    for level in range(1, rel.config.max_refinement_levels + 1):
        point = _panel_point(rel, side, level)
        if point == prev:
            break
        panel = _quad(rel, prev, point)
        acc += panel
        prev = point
        if last_panel is not None and last_panel != 0.0:
            ratio = panel / last_panel
            if 0.0 <= ratio < 1.0:
                estimate = acc + panel * ratio / (1.0 - ratio)
                settled = LIMIT_TOL * max(1.0, abs(estimate))
                if last_estimate is not None and abs(estimate - last_estimate) <= settled:
                    result = (estimate, True)
                    rel._limits[key] = result
                    logger.debug(f"{rel.tag}: {key} limit {estimate} after {level} levels")
                    return result
                last_estimate = estimate
        if abs(panel) <= LIMIT_TOL * max(1.0, abs(acc)) and last_panel is not None:
            result = (acc, True)
            rel._limits[key] = result
            return result
        last_panel = panel

    if ratio >= DIVERGENCE_RATIO or abs(acc) > 1.0 / LIMIT_TOL:
        result = (math.copysign(math.inf, acc), False)
        logger.info(f"{rel.tag}: antiderivative diverges at the {key} end phi={end}")
    else:
        logger.warning(
            f"{rel.tag}: {key} limit not converged after "
            f"{rel.config.max_refinement_levels} levels, using {acc}"
        )
        result = (acc, True)
    rel._limits[key] = result
    return result


def antiderivative(rel: ImplicitRelation, phi: float) -> float:
    """
    Integral of the relation integrand from phi0 to phi.

    Args:
        rel: Implicit relation
        phi: Upper limit, inside the closed bracket

    Returns:
        A(phi)

    Raises:
        OutOfDomainError: If phi lies outside the bracket
        NonIntegrableEndpointError: If phi is a bracket end where A diverges

    Examples:
        >>> rel = ImplicitRelation(lambda s: 1.0, 1.0, 1.0, 0.0, lambda p, d, dd: 0.0)
        >>> round(antiderivative(rel, 2.5), 12)
        1.5
    """
    lo, hi = rel.bracket
    if not lo <= phi <= hi:
        raise OutOfDomainError(f"{rel.tag}: phi={phi} outside the bracket [{lo}, {hi}]")
    for side, end in ((_LO, lo), (_HI, hi)):
        if phi == end and rel.singular_ends[side]:
            value, finite = _end_limit(rel, side)
            if not finite:
                raise NonIntegrableEndpointError(
                    f"{rel.tag}: antiderivative diverges at the bracket end phi={end}"
                )
            return value
    return _quad(rel, rel.phi0, phi)


def admissible_xi_range(rel: ImplicitRelation) -> Tuple[float, float]:
    """
    xi-interval reachable by the relation over its bracket.

    Returns:
        (xi_lo, xi_hi) with possibly infinite ends
    """
    values = []
    for side in (_LO, _HI):
        limit, _ = _end_limit(rel, side)
        if math.isfinite(limit):
            values.append(rel.xi_of(limit))
        else:
            values.append(math.copysign(math.inf, limit / rel.slope))
    a, b = sorted(values)
    return a, b


def invert(rel: ImplicitRelation, xi: float) -> float:
    """
    phi with A(phi) = slope * xi + offset.

    The panel containing the target is located by walking the geometric
    panels toward the relevant bracket end, then Brent's method finishes.

    Raises:
        OutOfDomainError: If the target is outside the range of A
    """
    target = rel.rhs(xi)
    if target == 0.0:
        return rel.phi0
    side = _HI if target * rel.direction > 0 else _LO
    limit, finite = _end_limit(rel, side)
    outward = 1.0 if (side == _HI) == (rel.direction > 0) else -1.0
    if finite and (target - limit) * outward >= 0.0:
        if target == limit:
            return rel.bracket[side]
        admissible = admissible_xi_range(rel)
        raise OutOfDomainError(
            f"{rel.tag}: xi={xi} outside the admissible interval "
            f"[{admissible[0]}, {admissible[1]}]",
            admissible=admissible,
        )

    cfg = rel.config
    acc = 0.0
    prev = rel.phi0
    for level in range(1, cfg.max_refinement_levels + 1):
        point = _panel_point(rel, side, level)
        if point == prev:
            break
        panel = _quad(rel, prev, point)
        if (acc + panel - target) * (acc - target) <= 0.0:
            start, base = prev, acc

            def gap(s: float) -> float:
                return base + _quad(rel, start, s) - target

            return float(brentq(gap, start, point, xtol=1e-300, rtol=cfg.invert_rtol))
        acc += panel
        prev = point

    admissible = admissible_xi_range(rel)
    raise OutOfDomainError(
        f"{rel.tag}: xi={xi} not reached within {cfg.max_refinement_levels} refinement levels; "
        f"admissible interval [{admissible[0]}, {admissible[1]}]",
        admissible=admissible,
    )


def _invert_grid(rel: ImplicitRelation, grid: np.ndarray) -> np.ndarray:
    values = np.empty_like(grid)
    with ThreadPoolExecutor(
        max_workers=rel.config.threads, thread_name_prefix="invert"
    ) as executor:
        future_to_index = {executor.submit(invert, rel, float(x)): i for i, x in enumerate(grid)}
        for future in as_completed(future_to_index):
            values[future_to_index[future]] = future.result()
    return values


def build_profile(
    rel: ImplicitRelation,
    xi_range: Tuple[float, float],
    grid_size: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> ProfileTable:
    """
    Tabulate phi on a uniform xi grid and certify it against the governing ODE.

    phi' is taken from the relation itself (slope / integrand(phi)); phi'' is
    the derivative of a local quintic fit over 7-point windows of phi'.

    Args:
        rel: Implicit relation
        xi_range: (xi_start, xi_end), strictly inside the admissible interval
        grid_size: Number of grid points (default: config default, min 33)
        tolerance: Certification tolerance (default: config certify_tol)

    Returns:
        ProfileTable, with certified=False when the residual exceeds tolerance

    Raises:
        QuadratureInputError: If the grid is too small or the range is empty
        OutOfDomainError: If part of the range is not admissible
    """
    cfg = rel.config
    size = cfg.default_grid_size if grid_size is None else grid_size
    if size < cfg.min_grid_size:
        raise QuadratureInputError(f"grid size {size} below the minimum {cfg.min_grid_size}")
    a, b = float(xi_range[0]), float(xi_range[1])
    if not a < b:
        raise QuadratureInputError(f"empty xi range [{a}, {b}]")
    admissible = admissible_xi_range(rel)
    if not admissible[0] < a or not b < admissible[1]:
        raise OutOfDomainError(
            f"{rel.tag}: xi range [{a}, {b}] leaves the admissible interval "
            f"({admissible[0]}, {admissible[1]})",
            admissible=admissible,
        )

    logger.info(f"Building profile '{rel.tag}' on [{a}, {b}] with {size} points")
    grid = np.linspace(a, b, size)
    phi = _invert_grid(rel, grid)
    dphi = np.array([rel.derivative(float(p)) for p in phi])
    h = float(grid[1] - grid[0])
    ddphi = savgol_filter(dphi, SAVGOL_WINDOW, SAVGOL_ORDER, deriv=1, delta=h, mode="interp")
    residual = np.array(
        [abs(rel.ode_residual(float(p), float(d), float(dd))) for p, d, dd in zip(phi, dphi, ddphi)]
    )
    round_trip = max(
        abs(antiderivative(rel, float(p)) - rel.rhs(float(x))) for p, x in zip(phi, grid)
    )

    tol = cfg.certify_tol if tolerance is None else tolerance
    worst = float(np.max(residual))
    certified = worst <= tol
    if certified:
        logger.info(
            f"Profile '{rel.tag}' certified: residual {worst:.3e}, round trip {round_trip:.3e}"
        )
    else:
        logger.warning(
            f"Profile '{rel.tag}' failed certification: residual {worst:.3e} > {tol:.1e}"
        )

    return ProfileTable(
        xi=grid.tolist(),
        phi=phi.tolist(),
        dphi=dphi.tolist(),
        ddphi=ddphi.tolist(),
        residual=residual.tolist(),
        certified_residual=worst,
        tolerance=tol,
        certified=certified,
        round_trip_error=float(round_trip),
        tag=rel.tag,
        constants=rel.constants,
        admissible_xi=admissible,
    )


def profile_from_table(table: ProfileTable) -> TabulatedProfile:
    return TabulatedProfile(table.xi, table.phi, name=table.tag, slopes=table.dphi)


def read_profile_csv(path: Union[str, Path]) -> TabulatedProfile:
    """
    Load a profile table written by ``family`` or ``solve-implicit``.

    Columns xi and phi are required; dphi is used when present.

    Raises:
        QuadratureInputError: If the file is missing or lacks the columns
    """
    file_path = Path(path)
    if not file_path.exists():
        raise QuadratureInputError(f"profile table not found: {file_path}")
    try:
        frame = pd.read_csv(file_path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise QuadratureInputError(f"cannot read profile table {file_path}: {e}") from e
    missing: List[str] = [c for c in ("xi", "phi") if c not in frame.columns]
    if missing:
        raise QuadratureInputError(f"profile table {file_path} lacks columns {missing}")
    slopes = frame["dphi"].to_numpy() if "dphi" in frame.columns else None
    logger.debug(f"Loaded profile table {file_path} with {len(frame)} rows")
    return TabulatedProfile(
        frame["xi"].to_numpy(), frame["phi"].to_numpy(), name=file_path.stem, slopes=slopes
    )
