"""Reduced eigenvalues, sigma_k and ODE residuals for the two ansätze."""

from math import comb
from typing import Sequence, Tuple

import numpy as np

from ..types.models import ReducedResidual
from .ansatz import RotationAnsatz, TranslationAnsatz
from .constants import b_nk, c_nk
from .exceptions import ProfileDomainError, ReductionInputError


def _check_order(n: int, k: int) -> None:
    if n < 2 or not 1 <= k <= n:
        raise ReductionInputError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")


def translation_eigenpair(
    phi: float, dphi: float, ddphi: float, alpha_norm2: float
) -> Tuple[float, float]:
    """
    Eigenvalues of the Schouten endomorphism under the translation ansatz.

    Returns:
        (theta, mu): theta with multiplicity n-1, mu simple
    """
    theta = -0.5 * dphi * dphi * alpha_norm2
    mu = (phi * ddphi - 0.5 * dphi * dphi) * alpha_norm2
    return theta, mu


def translation_sigma_k(
    phi: float, dphi: float, ddphi: float, alpha_norm2: float, n: int, k: int
) -> float:
    """sigma_k = b_nk [k phi phi'' - (n/2) phi'^2] phi'^(2(k-1)) |alpha|^(2k)."""
    _check_order(n, k)
    bracket = k * phi * ddphi - 0.5 * n * dphi * dphi
    return float(b_nk(n, k)) * bracket * dphi ** (2 * (k - 1)) * alpha_norm2**k


def rotation_eigenpair(phi: float, dphi: float, ddphi: float, r: float) -> Tuple[float, float]:
    """
    Eigenvalues of the Schouten endomorphism under the rotation ansatz.

    Returns:
        (theta, mu) with theta = 2(phi phi' - r phi'^2) of multiplicity n-1
        and mu = theta + 4 r phi phi''
    """
    theta = 2.0 * (phi * dphi - r * dphi * dphi)
    return theta, theta + 4.0 * r * phi * ddphi


def rotation_sigma_k(phi: float, dphi: float, ddphi: float, r: float, n: int, k: int) -> float:
    """sigma_k = c_nk [phi phi' - r phi'^2]^(k-1) [2n phi phi' - 2n r phi'^2 + 4k r phi phi'']."""
    _check_order(n, k)
    base = phi * dphi - r * dphi * dphi
    bracket = 2 * n * phi * dphi - 2 * n * r * dphi * dphi + 4 * k * r * phi * ddphi
    return float(c_nk(n, k)) * base ** (k - 1) * bracket


def binomial_sigma_k(theta: float, mu: float, n: int, k: int) -> float:
    """sigma_k of a spectrum {theta (n-1 times), mu}."""
    _check_order(n, k)
    weight = comb(n, k) / n
    return weight * ((n - k) * theta + k * mu) * theta ** (k - 1)


def translation_residuals(
    a: TranslationAnsatz, n: int, k: int, lam: float, xi: float
) -> ReducedResidual:
    """
    Residuals of the reduced translation equations at xi.

    r1 = f'' + 2 f' phi' / phi
    r2 = sigma_k + phi phi' f' |alpha|^2 / (2(n-1)) - lambda

    Raises:
        ReductionInputError: If n differs from the ansatz dimension
        ProfileDomainError: If phi(xi) <= 0
    """
    if n != a.n:
        raise ReductionInputError(f"n={n} but the ansatz lives in dimension {a.n}")
    phi, dphi, ddphi = a.phi.derivatives(xi)
    if not phi > 0.0:
        raise ProfileDomainError(f"phi({xi}) = {phi} is not positive")
    _, df, ddf = a.f.derivatives(xi)
    s = a.alpha_norm2
    r1 = ddf + 2.0 * df * dphi / phi
    sigma = translation_sigma_k(phi, dphi, ddphi, s, n, k)
    r2 = sigma + phi * dphi * df * s / (2 * (n - 1)) - lam
    return ReducedResidual(r1=r1, r2=r2)


def rotation_residuals(
    a: RotationAnsatz, n: int, k: int, lam: float, r: float
) -> ReducedResidual:
    """
    Residuals of the reduced rotation equations at r.

    r1 = f'' + 2 f' phi' / phi
    r2 = sigma_k - phi^2 f' / (n-1) + 2 r f' phi' phi / (n-1) - lambda

    Raises:
        ReductionInputError: If n differs from the ansatz dimension
        ProfileDomainError: If r is outside the profile interval or phi(r) <= 0
    """
    if n != a.n:
        raise ReductionInputError(f"n={n} but the ansatz lives in dimension {a.n}")
    lo, hi = a.interval
    if not lo < r < hi:
        raise ProfileDomainError(f"r={r} outside the profile interval ({lo}, {hi})")
    phi, dphi, ddphi = a.phi.derivatives(r)
    if not phi > 0.0:
        raise ProfileDomainError(f"phi({r}) = {phi} is not positive")
    _, df, ddf = a.f.derivatives(r)
    r1 = ddf + 2.0 * df * dphi / phi
    sigma = rotation_sigma_k(phi, dphi, ddphi, r, n, k)
    r2 = sigma - phi * phi * df / (n - 1) + 2.0 * r * df * dphi * phi / (n - 1) - lam
    return ReducedResidual(r1=r1, r2=r2)


def translation_hessian(a: TranslationAnsatz, xi: float) -> np.ndarray:
    """
    Hessian of f(xi) for the metric delta / phi(xi)^2.

    H_ij = alpha_i alpha_j f'' + (2 alpha_i alpha_j - delta_ij eps_i |alpha|^2) phi' f' / phi
    """
    phi, dphi, _ = a.phi.derivatives(xi)
    if not phi > 0.0:
        raise ProfileDomainError(f"phi({xi}) = {phi} is not positive")
    _, df, ddf = a.f.derivatives(xi)
    outer = np.outer(a.alpha, a.alpha)
    mixed = dphi * df / phi
    return ddf * outer + mixed * (2.0 * outer - np.diag(a.signature.array) * a.alpha_norm2)


def rotation_hessian(a: RotationAnsatz, x: Sequence[float]) -> np.ndarray:
    """
    Hessian of f(r) for the metric delta / phi(r)^2 at the point x.

    H_ij = 4 eps_i eps_j x_i x_j (f'' + 2 f' phi' / phi) + 2 eps_i delta_ij (f' - 2 r phi' f' / phi)
    """
    point = np.asarray(x, dtype=float)
    if point.shape != (a.n,):
        raise ReductionInputError(f"point has shape {point.shape}, expected ({a.n},)")
    eps = a.signature.array
    r = float(np.dot(eps, point * point))
    phi, dphi, _ = a.phi.derivatives(r)
    if not phi > 0.0:
        raise ProfileDomainError(f"phi({r}) = {phi} is not positive")
    _, df, ddf = a.f.derivatives(r)
    ex = eps * point
    radial = 4.0 * (ddf + 2.0 * df * dphi / phi) * np.outer(ex, ex)
    return radial + 2.0 * np.diag(eps) * (df - 2.0 * r * dphi * df / phi)
