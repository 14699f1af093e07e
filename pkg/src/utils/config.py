"""Numerical thresholds shared by every package."""

import os
from typing import Any, Dict, Optional
from .logger import get_logger

logger = get_logger(__name__)


class NumericsConfig:
    """Numerical configuration (tolerances, sampling and integration limits)."""

    # Verification
    RESIDUAL_TOL = 1e-8  # max-abs soliton residual counted as zero
    SAMPLE_POINTS = 64  # quasi-random verification points
    PHI_FLOOR = 1e-12  # sampled points with phi below this are rejected
    SINGULAR_MARGIN = 1e-6  # distance kept from ansatz singular sets
    FD_STEP = 1e-5  # central-difference oracle step

    # Quadrature
    QUAD_EPSABS = 1e-12
    QUAD_EPSREL = 1e-12
    QUAD_LIMIT = 200  # subintervals per adaptive panel
    INVERT_RTOL = 1e-15
    MAX_REFINEMENT_LEVELS = 60
    BRACKET_DECADES = 6  # log-spaced bracket scan reaches phi0 * 10**(+-6)
    BRACKET_STEPS_PER_DECADE = 8
    MIN_GRID_SIZE = 33
    DEFAULT_GRID_SIZE = 257
    CERTIFY_TOL = 1e-6

    # Geodesics
    ODE_RTOL = 1e-9
    ODE_ATOL = 1e-12
    BLOWUP = 1e8
    STEP_FLOOR = 1e-14
    TRAJECTORY_SAMPLES = 1000
    MAX_STEPS = 2_000_000

    def __init__(
        self,
        residual_tol: float = RESIDUAL_TOL,
        sample_points: int = SAMPLE_POINTS,
        phi_floor: float = PHI_FLOOR,
        singular_margin: float = SINGULAR_MARGIN,
        fd_step: float = FD_STEP,
        quad_epsabs: float = QUAD_EPSABS,
        quad_epsrel: float = QUAD_EPSREL,
        invert_rtol: float = INVERT_RTOL,
        max_refinement_levels: int = MAX_REFINEMENT_LEVELS,
        min_grid_size: int = MIN_GRID_SIZE,
        certify_tol: float = CERTIFY_TOL,
        ode_rtol: float = ODE_RTOL,
        ode_atol: float = ODE_ATOL,
        blowup: float = BLOWUP,
        step_floor: float = STEP_FLOOR,
        trajectory_samples: int = TRAJECTORY_SAMPLES,
        max_steps: int = MAX_STEPS,
        threads: Optional[int] = None,
    ):
        """
        Initialize numerical configuration.

        Args:
            residual_tol: Max-abs residual entry accepted as zero (default: 1e-8)
            sample_points: Number of quasi-random verification points (default: 64)
            phi_floor: Rejection floor for the conformal factor at sampled points
            singular_margin: Margin kept from ansatz singular sets when sampling
            fd_step: Relative step of the central-difference oracle
            quad_epsabs: Absolute tolerance per quadrature panel (never looser than 1e-10)
            quad_epsrel: Relative tolerance per quadrature panel
            invert_rtol: Relative tolerance of the bracketed inversion (never looser than 1e-12)
            max_refinement_levels: Geometric refinement levels toward a bracket end (default: 60)
            min_grid_size: Smallest accepted profile grid (default: 33)
            certify_tol: ODE residual accepted when certifying a profile table (default: 1e-6)
            ode_rtol: Relative tolerance of the geodesic integrator (default: 1e-9)
            ode_atol: Absolute tolerance of the geodesic integrator (default: 1e-12)
            blowup: |x| or |v| above this terminates with blow_up (default: 1e8)
            step_floor: Step below step_floor * t_scale terminates with step_collapse
            trajectory_samples: Uniform samples stored per trajectory (default: 1000)
            max_steps: Step budget per integration
            threads: Worker cap for batch work (default: YAMABE_LAB_THREADS or CPU count)

        Raises:
            ValueError: If a tolerance is non-positive or looser than the accepted maximum
        """
        if quad_epsabs <= 0 or quad_epsabs > 1e-10:
            raise ValueError(f"quad_epsabs must lie in (0, 1e-10], got {quad_epsabs}")
        if invert_rtol <= 0 or invert_rtol > 1e-12:
            raise ValueError(f"invert_rtol must lie in (0, 1e-12], got {invert_rtol}")
        for name, value in (
            ("residual_tol", residual_tol),
            ("certify_tol", certify_tol),
            ("ode_rtol", ode_rtol),
            ("ode_atol", ode_atol),
            ("quad_epsrel", quad_epsrel),
        ):
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if sample_points < 1:
            raise ValueError(f"sample_points must be positive, got {sample_points}")

        self.residual_tol = residual_tol
        self.sample_points = sample_points
        self.phi_floor = phi_floor
        self.singular_margin = singular_margin
        self.fd_step = fd_step
        self.quad_epsabs = quad_epsabs
        self.quad_epsrel = quad_epsrel
        self.quad_limit = self.QUAD_LIMIT
        self.invert_rtol = invert_rtol
        self.max_refinement_levels = max_refinement_levels
        self.bracket_decades = self.BRACKET_DECADES
        self.bracket_steps_per_decade = self.BRACKET_STEPS_PER_DECADE
        self.min_grid_size = min_grid_size
        self.default_grid_size = max(self.DEFAULT_GRID_SIZE, min_grid_size)
        self.certify_tol = certify_tol
        self.ode_rtol = ode_rtol
        self.ode_atol = ode_atol
        self.blowup = blowup
        self.step_floor = step_floor
        self.trajectory_samples = trajectory_samples
        self.max_steps = max_steps
        self.threads = threads or self._threads_from_env()

        logger.debug(f"Numerics configured: {self}")

    @staticmethod
    def _threads_from_env() -> int:
        """
        Read the worker cap from YAMABE_LAB_THREADS.

        Returns:
            Positive worker count
        """
        raw = os.environ.get("YAMABE_LAB_THREADS")
        if raw:
            try:
                return max(1, int(raw))
            except ValueError:
                logger.warning(f"Ignoring non-integer YAMABE_LAB_THREADS={raw!r}")
        return max(1, min(4, os.cpu_count() or 1))

    def get_config_dict(self) -> Dict[str, Any]:
        """
        Get configuration as dictionary (embedded in reports).

        Returns:
            Dictionary with the numerical thresholds
        """
        return {
            "residual_tol": self.residual_tol,
            "sample_points": self.sample_points,
            "quad_epsabs": self.quad_epsabs,
            "invert_rtol": self.invert_rtol,
            "certify_tol": self.certify_tol,
            "ode_rtol": self.ode_rtol,
            "ode_atol": self.ode_atol,
            "blowup": self.blowup,
            "step_floor": self.step_floor,
        }

    def __repr__(self) -> str:
        """String representation of configuration."""
        return (
            f"NumericsConfig(residual_tol={self.residual_tol}, points={self.sample_points}, "
            f"quad_epsabs={self.quad_epsabs}, ode_rtol={self.ode_rtol}, "
            f"ode_atol={self.ode_atol}, threads={self.threads})"
        )


# Default configuration instance
_default_config: Optional[NumericsConfig] = None


def get_default_config() -> NumericsConfig:
    """
    Get or create default numerical configuration.

    Returns:
        Default NumericsConfig instance
    """
    global _default_config
    if _default_config is None:
        _default_config = NumericsConfig()
    return _default_config


def set_default_config(config: Optional[NumericsConfig]) -> None:
    """
    Replace the default configuration (None resets to defaults on next access).

    Args:
        config: New default configuration
    """
    global _default_config
    _default_config = config
    if config is not None:
        logger.info(f"Default numerics replaced: {config}")
