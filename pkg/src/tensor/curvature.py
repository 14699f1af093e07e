"""Pointwise curvature of conformal metrics g = delta / phi^2."""

from typing import Iterable, Sequence, Tuple

import numpy as np

from ..types.models import CurvaturePack, Signature
from ..utils.logger import get_logger
from .exceptions import DimensionMismatchError, DomainError
from .fields import ScalarField, SolitonSpec, as_point

logger = get_logger(__name__)


def _phi_data(
    phi: ScalarField, sig: Signature, x: Sequence[float]
) -> Tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """
    Value, gradient, flat Hessian of phi plus the signature vector.

    Raises:
        DimensionMismatchError: If phi, sig and x disagree on n
        DomainError: If phi(x) <= 0
    """
    if phi.dim != sig.n:
        raise DimensionMismatchError(f"phi has dim {phi.dim} but signature has {sig.n} entries")
    j = phi.jet(x)
    if not j.value > 0.0:
        raise DomainError(f"conformal factor must be positive, got {j.value}")
    return j.value, j.grad, j.hess, sig.array


def _norms(grad: np.ndarray, hess: np.ndarray, eps: np.ndarray) -> Tuple[float, float]:
    """Signed Laplacian and signed squared gradient norm."""
    return float(np.dot(eps, np.diag(hess))), float(np.dot(eps, grad * grad))


def conformal_christoffel(phi: ScalarField, sig: Signature, x: Sequence[float]) -> np.ndarray:
    """
    Christoffel symbols of delta / phi^2.

    Args:
        phi: Conformal factor
        sig: Background signature
        x: Evaluation point

    Returns:
        Array gamma with gamma[k, i, j] the symbol with upper index k

    Raises:
        DomainError: If phi(x) <= 0
    """
    value, grad, _, eps = _phi_data(phi, sig, x)
    d = grad / value
    eye = np.eye(sig.n)
    upper_i = np.einsum("ki,j->kij", eye, d)
    upper_j = np.einsum("kj,i->kij", eye, d)
    diagonal = np.einsum("ij,i,k->kij", eye, eps, eps * d)
    return diagonal - upper_i - upper_j


def hessian_from_jets(
    f_grad: np.ndarray,
    f_hess: np.ndarray,
    phi_value: float,
    phi_grad: np.ndarray,
    eps: np.ndarray,
) -> np.ndarray:
    cross = np.outer(phi_grad, f_grad)
    mixed = float(np.dot(eps, phi_grad * f_grad))
    return f_hess + (cross + cross.T) / phi_value - np.diag(eps) * (mixed / phi_value)


def hessian_conformal(
    f: ScalarField, phi: ScalarField, sig: Signature, x: Sequence[float]
) -> np.ndarray:
    """
    Hessian of f with respect to delta / phi^2.

    Args:
        f: Potential
        phi: Conformal factor
        sig: Background signature
        x: Evaluation point

    Returns:
        Symmetric n x n matrix

    Raises:
        DimensionMismatchError: If f.dim differs from n
        DomainError: If phi(x) <= 0
    """
    if f.dim != sig.n:
        raise DimensionMismatchError(f"f has dim {f.dim} but signature has {sig.n} entries")
    value, grad, _, eps = _phi_data(phi, sig, x)
    fj = f.jet(x)
    return hessian_from_jets(fj.grad, fj.hess, value, grad, eps)


def _ricci(value: float, grad: np.ndarray, hess: np.ndarray, eps: np.ndarray) -> np.ndarray:
    n = eps.shape[0]
    laplacian, grad_norm2 = _norms(grad, hess, eps)
    trace_part = value * laplacian - (n - 1) * grad_norm2
    return ((n - 2) * value * hess + trace_part * np.diag(eps)) / (value * value)


def _scalar(value: float, grad: np.ndarray, hess: np.ndarray, eps: np.ndarray) -> float:
    n = eps.shape[0]
    laplacian, grad_norm2 = _norms(grad, hess, eps)
    return (n - 1) * (2 * value * laplacian - n * grad_norm2)


def _schouten(value: float, grad: np.ndarray, hess: np.ndarray, eps: np.ndarray) -> np.ndarray:
    # Reduced form, regular at n = 2.
    _, grad_norm2 = _norms(grad, hess, eps)
    return hess / value - np.diag(eps) * (grad_norm2 / (2 * value * value))


def _endomorphism(value: float, grad: np.ndarray, hess: np.ndarray, eps: np.ndarray) -> np.ndarray:
    _, grad_norm2 = _norms(grad, hess, eps)
    return value * eps[:, None] * hess - 0.5 * grad_norm2 * np.eye(eps.shape[0])


def ricci_conformal(phi: ScalarField, sig: Signature, x: Sequence[float]) -> np.ndarray:
    """
    Ricci tensor of delta / phi^2.

    Ric = phi^-2 {(n-2) phi Hess(phi) + [phi Lap(phi) - (n-1)|grad phi|^2] delta}
    with signed Laplacian and norm.
    """
    return _ricci(*_phi_data(phi, sig, x))


def scalar_conformal(phi: ScalarField, sig: Signature, x: Sequence[float]) -> float:
    """Scalar curvature (n-1)(2 phi Lap(phi) - n |grad phi|^2)."""
    return _scalar(*_phi_data(phi, sig, x))


def schouten_endomorphism(phi: ScalarField, sig: Signature, x: Sequence[float]) -> np.ndarray:
    """
    Schouten endomorphism with the first index raised by g^{ij} = phi^2 eps_i delta^{ij}.

    Entry (i, j) equals phi eps_i phi_ij - |grad phi|^2 delta_ij / 2.
    """
    return _endomorphism(*_phi_data(phi, sig, x))


def sigma_all(endo: np.ndarray) -> np.ndarray:
    """
    Elementary symmetric functions sigma_1..sigma_n of the spectrum of endo.

    Uses Newton's identities on the power traces tr(endo^m), i.e. the
    characteristic polynomial coefficients, so the result is real even when
    the spectrum is complex. sigma_1 is the plain trace.

    Args:
        endo: Square matrix

    Returns:
        Array [sigma_1, ..., sigma_n]

    Raises:
        DimensionMismatchError: If endo is not square

    Examples:
        >>> sigma_all(np.diag([1.0, 2.0, 3.0])).tolist()
        [6.0, 11.0, 6.0]
    """
    matrix = np.asarray(endo, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"endomorphism must be square, got shape {matrix.shape}")
    n = matrix.shape[0]
    traces = []
    current = np.eye(n)
    for _ in range(n):
        current = current @ matrix if traces else matrix
        traces.append(float(np.trace(current)))
    e = [1.0]
    for k in range(1, n + 1):
        total = 0.0
        for i in range(1, k + 1):
            total += (-1) ** (i - 1) * e[k - i] * traces[i - 1]
        e.append(total / k)
    return np.asarray(e[1:])


def characteristic_coefficients(endo: np.ndarray) -> np.ndarray:
    """
    Coefficients of det(tI - endo), highest degree first.

    Returns:
        [1, -sigma_1, sigma_2, ..., (-1)^n sigma_n]
    """
    sigma = sigma_all(endo)
    signs = np.array([(-1) ** k for k in range(1, sigma.shape[0] + 1)], dtype=float)
    return np.concatenate([[1.0], signs * sigma])


def curvature_pack(phi: ScalarField, sig: Signature, x: Sequence[float]) -> CurvaturePack:
    """
    All curvature quantities at x from a single jet evaluation.

    Returns:
        CurvaturePack
    """
    point = as_point(x, sig.n)
    data = _phi_data(phi, sig, point)
    endo = _endomorphism(*data)
    return CurvaturePack(
        x=point,
        ricci=_ricci(*data),
        scalar=_scalar(*data),
        schouten=_schouten(*data),
        endo=endo,
        sigma=sigma_all(endo),
    )


def soliton_residual(spec: SolitonSpec, x: Sequence[float]) -> np.ndarray:
    """
    Residual of Hess(f) = 2(n-1)(sigma_k - lambda) g at x.

    Args:
        spec: Candidate soliton
        x: Evaluation point

    Returns:
        Hess_g(f) - 2(n-1)(sigma_k - lambda) eps_i delta_ij / phi^2

    Raises:
        DomainError: If phi(x) <= 0
    """
    point = as_point(x, spec.n)
    value, grad, hess, eps = _phi_data(spec.phi, spec.signature, point)
    fj = spec.f.jet(point)
    sigma_k = sigma_all(_endomorphism(value, grad, hess, eps))[spec.k - 1]
    hess_f = hessian_from_jets(fj.grad, fj.hess, value, grad, eps)
    factor = 2 * (spec.n - 1) * (sigma_k - spec.lam) / (value * value)
    return hess_f - factor * np.diag(eps)


def max_soliton_residual(spec: SolitonSpec, points: Iterable[Sequence[float]]) -> float:
    """Largest max-abs residual entry over a point set."""
    worst = 0.0
    for x in points:
        worst = max(worst, float(np.max(np.abs(soliton_residual(spec, x)))))
    logger.debug(f"max soliton residual {worst:.3e}")
    return worst
