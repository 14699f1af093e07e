"""Translation-invariant families: light-like, constant-phi and the implicit relations."""

from typing import Optional, Sequence

from ..quadrature.relation import ImplicitRelation, odd_root
from ..reductions.ansatz import Rational, TranslationAnsatz
from ..reductions.constants import b_nk
from ..reductions.profiles import AnalyticProfile, Profile
from ..types.models import Signature
from ..utils.config import NumericsConfig
from ..utils.logger import get_logger
from .exceptions import FamilyInputError
from .potential import potential_from_phi

logger = get_logger(__name__)


def _check_order(n: int, k: int) -> None:
    if n < 2 or not 1 <= k <= n:
        raise FamilyInputError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")


def _effective_c(c: float, k: int, alpha_norm2: float) -> float:
    # The constant enters the reduced equation as c |alpha|^(2(1-k)).
    if alpha_norm2 == 0:
        raise FamilyInputError("alpha must be space-like or time-like (|alpha|^2 != 0)")
    return c / alpha_norm2 ** (k - 1)


def p_constant(n: int, k: int, c: float, alpha_norm2: float = 1.0) -> float:
    """
    p = c / (2(n-1) k b_nk) * ((2k-n)/(2k))^(2(k-1)).

    Examples:
        >>> p_constant(4, 1, 6.0)
        1.0
    """
    _check_order(n, k)
    c_eff = _effective_c(c, k, alpha_norm2)
    scale = ((2 * k - n) / (2 * k)) ** (2 * (k - 1))
    return c_eff / (2 * (n - 1) * k * float(b_nk(n, k))) * scale


def family_translation_n_ne_2k(
    n: int,
    k: int,
    c: float,
    c1: float,
    c2: float,
    alpha_norm2: float = 1.0,
    phi0: float = 1.0,
    config: Optional[NumericsConfig] = None,
) -> ImplicitRelation:
    """
    Implicit relation of the steady family with n != 2k and phi' != 0.

    integral dphi / (phi^(n/2k) [K phi^e + c1]^(1/(2k-1))) = 2k/(2k-n) xi + c2
    with K = (n-2k) p (1-2k) / (2nk-n+2k) and e = -(2nk-n+2k)/(2k); the
    odd root is real for negative arguments. phi0 is the base point of the
    integral.

    Args:
        n: Dimension
        k: Curvature order (2k != n)
        c: Constant of the potential, f' = c / phi^2
        c1: Integration constant inside the bracket
        c2: Constant on the right side
        alpha_norm2: Signed norm of alpha (non-zero)
        phi0: Base point of the integral
        config: Numerical configuration

    Returns:
        ImplicitRelation carrying the ODE residual
        [phi phi'' - (n/2k) phi'^2] phi'^(2(k-1)) + q phi' / phi, q = c / (2k b_nk (n-1))

    Raises:
        FamilyInputError: If n = 2k, the order is invalid or c = c1 = 0
    """
    _check_order(n, k)
    if n == 2 * k:
        raise FamilyInputError(f"n = 2k = {n}: use the n = 2k family")
    if c == 0 and c1 == 0:
        raise FamilyInputError("c = c1 = 0 leaves no finite integrand")
    b = float(b_nk(n, k))
    c_eff = _effective_c(c, k, alpha_norm2)
    p = p_constant(n, k, c, alpha_norm2)
    q = c_eff / (2 * k * b * (n - 1))
    spread = 2 * n * k - n + 2 * k
    coefficient = (n - 2 * k) * p * (1 - 2 * k) / spread
    exponent = -spread / (2 * k)
    root_degree = 2 * k - 1
    phi_power = n / (2 * k)

    def bracket(phi: float) -> float:
        return coefficient * phi**exponent + c1

    def integrand(phi: float) -> float:
        return 1.0 / (phi**phi_power * odd_root(bracket(phi), root_degree))

    def ode_residual(phi: float, d1: float, d2: float) -> float:
        return (phi * d2 - phi_power * d1 * d1) * d1 ** (2 * (k - 1)) + q * d1 / phi

    logger.info(f"Translation family n={n}, k={k}: p={p}, K={coefficient}, exponent={exponent}")
    return ImplicitRelation(
        integrand,
        phi0,
        slope=2 * k / (2 * k - n),
        offset=c2,
        ode_residual=ode_residual,
        bracket_expression=bracket,
        tag="TRANSLATION_N_NE_2K",
        constants={
            "n": n,
            "k": k,
            "c": c,
            "c1": c1,
            "c2": c2,
            "p": p,
            "alpha_norm2": alpha_norm2,
            "phi0": phi0,
        },
        config=config,
    )


def family_translation_n_eq_2k(
    n: int,
    c: float,
    c1: float,
    c2: float,
    alpha_norm2: float = 1.0,
    phi0: float = 1.0,
    config: Optional[NumericsConfig] = None,
) -> ImplicitRelation:
    """
    Implicit relation of the steady family with n = 2k and phi' != 0.

    integral dphi / (c/(b_nk n^2 phi) + c1 phi^(n-1))^(1/(n-1)) = xi + c2

    Raises:
        FamilyInputError: If n is odd or c = c1 = 0
    """
    if n < 2 or n % 2 != 0:
        raise FamilyInputError(f"n = 2k needs an even dimension, got n={n}")
    if c == 0 and c1 == 0:
        raise FamilyInputError("c = c1 = 0 makes the integrand infinite")
    k = n // 2
    b = float(b_nk(n, k))
    c_eff = _effective_c(c, k, alpha_norm2)
    root_degree = n - 1

    def bracket(phi: float) -> float:
        return c_eff / (b * n * n * phi) + c1 * phi**root_degree

    def integrand(phi: float) -> float:
        return 1.0 / odd_root(bracket(phi), root_degree)

    def ode_residual(phi: float, d1: float, d2: float) -> float:
        return (phi * d2 - d1 * d1) * d1 ** (n - 2) + d1 / phi * c_eff / (b * n * (n - 1))

    logger.info(f"Translation family n=2k={n}: c={c}, c1={c1}, c2={c2}")
    return ImplicitRelation(
        integrand,
        phi0,
        slope=1.0,
        offset=c2,
        ode_residual=ode_residual,
        bracket_expression=bracket,
        tag="TRANSLATION_N_EQ_2K",
        constants={
            "n": n,
            "k": k,
            "c": c,
            "c1": c1,
            "c2": c2,
            "alpha_norm2": alpha_norm2,
            "phi0": phi0,
        },
        config=config,
    )


def family_lightlike_steady(
    sig: Signature,
    alpha: Sequence[Rational],
    phi: Profile,
    c: float,
    d: float = 0.0,
) -> TranslationAnsatz:
    """
    Steady soliton for a light-like alpha and any positive phi.

    Raises:
        FamilyInputError: If alpha is not light-like
    """
    ansatz = TranslationAnsatz(sig, alpha, phi, AnalyticProfile.constant(d), name="lightlike")
    if not ansatz.is_lightlike:
        raise FamilyInputError(
            f"alpha={list(alpha)} is {ansatz.causal_type}, the family needs a light-like alpha"
        )
    ansatz.f = potential_from_phi(phi, c, d)
    return ansatz


def family_translation_phi_const(
    sig: Signature,
    alpha: Sequence[Rational],
    b: float,
    c: float,
    d: float = 0.0,
) -> TranslationAnsatz:
    """
    phi = b, f = c xi + d: the phi' = 0 branch of both translation theorems.

    Raises:
        FamilyInputError: If b <= 0
    """
    if not b > 0:
        raise FamilyInputError(f"constant conformal factor must be positive, got b={b}")
    return TranslationAnsatz(
        sig,
        alpha,
        AnalyticProfile.constant(b, name="phi_const"),
        AnalyticProfile(lambda s: c * s + d, name="f_linear"),
        name="phi_const",
    )
