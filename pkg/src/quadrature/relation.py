"""Implicit relations  integral_{phi0}^{phi} I(s) ds = slope * xi + offset."""

import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from ..utils.config import NumericsConfig, get_default_config
from ..utils.logger import get_logger
from .exceptions import QuadratureInputError, RelationDomainError

logger = get_logger(__name__)

BRENT_RTOL = 4 * float(np.finfo(float).eps)
Integrand = Callable[[float], float]
OdeResidual = Callable[[float, float, float], float]


def odd_root(value: float, degree: int) -> float:
    """
    Real root of odd degree, defined for negative values.

    Examples:
        >>> odd_root(-8.0, 3)
        -2.0
    """
    if degree % 2 != 1:
        raise QuadratureInputError(f"odd_root needs an odd degree, got {degree}")
    if degree == 1:
        return value
    return math.copysign(abs(value) ** (1.0 / degree), value)


def _finite_value(func: Callable[[float], float], phi: float) -> Optional[float]:
    try:
        value = func(phi)
    except (ZeroDivisionError, OverflowError, ValueError):
        return None
    if value is None or not math.isfinite(value):
        return None
    return value


class ImplicitRelation:
    """
    Monotone implicit relation defining phi(xi).

    A(phi) = integral of ``integrand`` from ``phi0`` to phi, and the relation
    reads A(phi(xi)) = slope * xi + offset. The integrand is finite and
    single-signed on the open bracket, so A is monotone there.
    """

    def __init__(
        self,
        integrand: Integrand,
        phi0: float,
        slope: float,
        offset: float,
        ode_residual: OdeResidual,
        bracket_expression: Optional[Callable[[float], float]] = None,
        bracket: Optional[Tuple[float, float]] = None,
        tag: str = "relation",
        constants: Optional[Dict[str, float]] = None,
        config: Optional[NumericsConfig] = None,
    ):
        """
        Initialize ImplicitRelation.

        Args:
            integrand: s -> I(s)
            phi0: Base point of the antiderivative (A(phi0) = 0)
            slope: Coefficient of xi on the right side
            offset: Constant on the right side
            ode_residual: (phi, phi', phi'') -> residual of the governing ODE
            bracket_expression: Expression under the odd root; its sign changes end the bracket
            bracket: Explicit validity bracket (skips discovery)
            tag: Family identifier used in reports
            constants: Family constants carried into certificates
            config: Numerical configuration (default: shared default)

        Raises:
            QuadratureInputError: If phi0 <= 0 or slope == 0
            RelationDomainError: If the integrand is unusable at phi0
        """
        if not phi0 > 0:
            raise QuadratureInputError(f"base point phi0 must be positive, got {phi0}")
        if slope == 0 or not math.isfinite(slope):
            raise QuadratureInputError(f"right-side slope must be finite and non-zero, got {slope}")
        self.integrand = integrand
        self.phi0 = float(phi0)
        self.slope = float(slope)
        self.offset = float(offset)
        self.ode_residual = ode_residual
        self.bracket_expression = bracket_expression
        self.tag = tag
        self.constants = dict(constants or {})
        self.config = config or get_default_config()

        base = _finite_value(integrand, self.phi0)
        if base is None or base == 0.0:
            raise RelationDomainError(
                f"{tag}: integrand is {base} at phi0={self.phi0}; choose another base point"
            )
        self.direction = 1.0 if base > 0 else -1.0
        if bracket is None:
            self.bracket, self.singular_ends = self._discover_bracket()
        else:
            lo, hi = bracket
            if not 0 <= lo < self.phi0 < hi:
                raise QuadratureInputError(f"bracket {bracket} must contain phi0={self.phi0}")
            self.bracket, self.singular_ends = (float(lo), float(hi)), (False, False)
        self._limits: Dict[str, Tuple[float, bool]] = {}

        logger.info(
            f"ImplicitRelation '{tag}': phi0={self.phi0}, rhs={self.slope}*xi+{self.offset}, "
            f"bracket={self.bracket}, singular_ends={self.singular_ends}"
        )

    def rhs(self, xi: float) -> float:
        return self.slope * xi + self.offset

    def xi_of(self, value: float) -> float:
        """xi at which the right side equals value."""
        return (value - self.offset) / self.slope

    def derivative(self, phi: float) -> float:
        """phi'(xi) implied by the relation: slope / I(phi)."""
        return self.slope / self.integrand(phi)

    def _admissible(self, phi: float, base_sign: float) -> bool:
        value = _finite_value(self.integrand, phi)
        if value is None or value == 0.0 or math.copysign(1.0, value) != self.direction:
            return False
        if self.bracket_expression is not None:
            expr = _finite_value(self.bracket_expression, phi)
            if expr is None or expr == 0.0 or math.copysign(1.0, expr) != base_sign:
                return False
        return True

    def _scan(self, upward: bool, base_sign: float) -> Tuple[float, bool]:
        steps = self.config.bracket_steps_per_decade
        last_good = self.phi0
        for j in range(1, self.config.bracket_decades * steps + 1):
            exponent = j / steps if upward else -j / steps
            candidate = self.phi0 * 10.0**exponent
            if self._admissible(candidate, base_sign):
                last_good = candidate
                continue
            return self._refine_end(last_good, candidate, base_sign), True
        return last_good, False

    def _refine_end(self, good: float, bad: float, base_sign: float) -> float:
        """Locate the sign change of the bracket expression between good and bad."""
        expr = self.bracket_expression
        if expr is None:
            return good
        bad_value = _finite_value(expr, bad)
        if bad_value is None:
            return good
        if bad_value == 0.0:
            return bad
        if math.copysign(1.0, bad_value) == base_sign:
            # integrand failed for another reason; keep the last admissible candidate
            return good
        try:
            return float(brentq(expr, good, bad, xtol=1e-300, rtol=BRENT_RTOL))
        except ValueError:
            return good

    def _discover_bracket(self) -> Tuple[Tuple[float, float], Tuple[bool, bool]]:
        """
        Scan log-spaced candidates phi0 * 10**(j/8) in both directions.

        Returns:
            ((phi_lo, phi_hi), (lo_is_singular, hi_is_singular))
        """
        base_sign = 1.0
        if self.bracket_expression is not None:
            expr = _finite_value(self.bracket_expression, self.phi0)
            if expr is None or expr == 0.0:
                raise RelationDomainError(
                    f"{self.tag}: bracket expression is {expr} at phi0={self.phi0}"
                )
            base_sign = math.copysign(1.0, expr)
        lo, lo_singular = self._scan(False, base_sign)
        hi, hi_singular = self._scan(True, base_sign)
        return (lo, hi), (lo_singular, hi_singular)

    def __repr__(self) -> str:
        return (
            f"ImplicitRelation(tag='{self.tag}', phi0={self.phi0}, slope={self.slope}, "
            f"offset={self.offset}, bracket={self.bracket})"
        )
