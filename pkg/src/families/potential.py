"""Potentials f with f' = c / phi^2 (the first reduced equation)."""

import math
from typing import Optional

from scipy.integrate import quad

from ..reductions.exceptions import ProfileDomainError
from ..reductions.profiles import Derivatives, Profile
from ..utils.config import get_default_config
from ..utils.logger import get_logger
from .exceptions import FamilyDomainError

logger = get_logger(__name__)


class PotentialProfile(Profile):
    """
    f(t) = d + c * integral_{base}^{t} ds / phi(s)^2.

    The value comes from adaptive quadrature; f' = c / phi^2 and
    f'' = -2 c phi' / phi^3 are exact, so the first reduced equation
    f'' + 2 f' phi' / phi = 0 holds identically.
    """

    def __init__(self, phi: Profile, c: float, d: float = 0.0, base: Optional[float] = None):
        """
        Initialize PotentialProfile.

        Args:
            phi: Conformal factor profile (positive on its interval)
            c: Integration constant multiplying 1 / phi^2
            d: Additive constant
            base: Lower quadrature limit (default: finite left end of the
                interval, otherwise 0)

        Raises:
            FamilyDomainError: If the base point is outside the interval
        """
        lo, hi = phi.interval
        if base is None:
            base = lo if math.isfinite(lo) else 0.0
        if not lo <= base < hi:
            raise FamilyDomainError(f"base point {base} outside the phi interval ({lo}, {hi})")
        super().__init__(f"f[{phi.name}]", phi.interval)
        self.phi = phi
        self.c = float(c)
        self.d = float(d)
        self.base = float(base)

    def _phi(self, t: float) -> Derivatives:
        v, d1, d2 = self.phi.derivatives(t)
        if not v > 0.0:
            raise ProfileDomainError(f"{self.phi.name} vanishes or changes sign at {t} (phi={v})")
        return v, d1, d2

    def _integral(self, t: float) -> float:
        if self.c == 0.0 or t == self.base:
            return 0.0
        cfg = get_default_config()
        value, _ = quad(
            lambda s: 1.0 / self._phi(s)[0] ** 2,
            self.base,
            t,
            epsabs=cfg.quad_epsabs,
            epsrel=cfg.quad_epsrel,
            limit=cfg.quad_limit,
        )
        return self.c * value

    def derivatives(self, t: float) -> Derivatives:
        v, d1, _ = self._phi(t)
        slope = self.c / (v * v)
        return self.d + self._integral(t), slope, -2.0 * slope * d1 / v

    def value(self, t: float) -> float:
        self._phi(t)
        return self.d + self._integral(t)


def potential_from_phi(
    phi: Profile, c: float, d: float = 0.0, base: Optional[float] = None
) -> Profile:
    """
    Potential of the translation/rotation families for a given conformal factor.

    Args:
        phi: Conformal factor profile
        c: Constant in f' = c / phi^2
        d: Additive constant
        base: Quadrature base point (see PotentialProfile)

    Returns:
        Profile of f (constant d when c = 0)

    Raises:
        FamilyDomainError: If the base point is not in the profile interval

    Examples:
        >>> from src.reductions import AnalyticProfile
        >>> f = potential_from_phi(AnalyticProfile(lambda s: 1.0 + 0.0 * s), 2.0, 1.0)
        >>> round(f.value(3.0), 12)
        7.0
    """
    logger.debug(f"Potential for {phi.name}: c={c}, d={d}")
    return PotentialProfile(phi, c, d, base)
