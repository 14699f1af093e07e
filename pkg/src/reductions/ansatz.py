"""Translation (xi = alpha . x) and rotation (r = sum eps_i x_i^2) ansätze."""

import math
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..tensor.fields import ScalarField, SolitonSpec
from ..tensor.jets import Jet
from ..types.models import Signature
from ..utils.logger import get_logger
from .exceptions import ReductionInputError
from .profiles import Profile

logger = get_logger(__name__)

Rational = Union[int, float, str, Fraction]


def to_fraction(value: Rational) -> Fraction:
    """
    Exact rational value of an alpha entry.

    Strings such as "1/3" are parsed exactly; floats keep their binary value.

    Raises:
        ReductionInputError: If the entry is not a finite number
    """
    if isinstance(value, bool):
        raise ReductionInputError(f"alpha entries must be numbers, got {value!r}")
    try:
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(value)
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise ReductionInputError(f"invalid alpha entry {value!r}: {e}") from e


class TranslationAnsatz:
    """
    Profiles phi(xi), f(xi) of the invariant xi = alpha_1 x_1 + ... + alpha_n x_n.

    The signed norm sum eps_i alpha_i^2 is kept both exactly (Fraction) and as
    a float; the light-like test uses the exact value only.
    """

    def __init__(
        self,
        signature: Signature,
        alpha: Sequence[Rational],
        phi: Profile,
        f: Profile,
        name: str = "translation",
    ):
        """
        Initialize TranslationAnsatz.

        Args:
            signature: Background signature
            alpha: Direction, one entry per coordinate
            phi: Conformal factor profile
            f: Potential profile
            name: Label used in logs and reports

        Raises:
            ReductionInputError: If alpha has the wrong length or vanishes
        """
        if len(alpha) != signature.n:
            raise ReductionInputError(
                f"alpha has {len(alpha)} entries but signature has {signature.n}"
            )
        self.signature = signature
        self.alpha_exact: List[Fraction] = [to_fraction(a) for a in alpha]
        if all(a == 0 for a in self.alpha_exact):
            raise ReductionInputError("alpha must be a non-zero vector")
        self.alpha = np.array([float(a) for a in self.alpha_exact])
        self.alpha_norm2_exact = sum(
            (e * a * a for e, a in zip(signature.eps, self.alpha_exact)), Fraction(0)
        )
        self.alpha_norm2 = float(self.alpha_norm2_exact)
        self.phi = phi
        self.f = f
        self.name = name

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def is_lightlike(self) -> bool:
        return self.alpha_norm2_exact == 0

    @property
    def causal_type(self) -> str:
        if self.alpha_norm2_exact > 0:
            return "space-like"
        if self.alpha_norm2_exact < 0:
            return "time-like"
        return "light-like"

    def xi(self, xs: Sequence[Union[Jet, float]]) -> Union[Jet, float]:
        total: Union[Jet, float] = 0.0
        for a, c in zip(self.alpha, xs):
            if a != 0.0:
                total = total + a * c
        return total

    def _field(self, profile: Profile, positive: bool, label: str) -> ScalarField:
        alpha = self.alpha

        def gradient(x: np.ndarray) -> Tuple[float, np.ndarray]:
            v, d1, _ = profile.derivatives(float(np.dot(alpha, x)))
            return v, d1 * alpha

        return ScalarField(
            self.n,
            lambda xs: profile(self.xi(xs)),
            positive=positive,
            name=f"{self.name}.{label}",
            gradient=gradient,
        )

    def phi_field(self) -> ScalarField:
        return self._field(self.phi, True, "phi")

    def f_field(self) -> ScalarField:
        return self._field(self.f, False, "f")

    def to_soliton_spec(self, k: int, lam: float) -> SolitonSpec:
        return SolitonSpec(
            n=self.n,
            k=k,
            lam=lam,
            signature=self.signature,
            phi=self.phi_field(),
            f=self.f_field(),
        )

    def __repr__(self) -> str:
        return (
            f"TranslationAnsatz(name='{self.name}', alpha={[str(a) for a in self.alpha_exact]}, "
            f"norm2={self.alpha_norm2_exact}, {self.causal_type})"
        )


class RotationAnsatz:
    """Profiles phi(r), f(r) of the invariant r = eps_1 x_1^2 + ... + eps_n x_n^2."""

    def __init__(
        self,
        signature: Signature,
        phi: Profile,
        f: Profile,
        interval: Tuple[float, float] = (0.0, math.inf),
        name: str = "rotation",
    ):
        """
        Initialize RotationAnsatz.

        Args:
            signature: Background signature
            phi: Conformal factor profile in r
            f: Potential profile in r
            interval: Open r-interval where the profiles are defined and phi > 0
            name: Label used in logs and reports

        Raises:
            ReductionInputError: If the interval is empty
        """
        a, b = interval
        if not a < b:
            raise ReductionInputError(f"empty profile interval ({a}, {b})")
        self.signature = signature
        self.phi = phi
        self.f = f
        self.interval = interval
        self.name = name

    @property
    def n(self) -> int:
        return self.signature.n

    def r(self, xs: Sequence[Union[Jet, float]]) -> Union[Jet, float]:
        total: Union[Jet, float] = 0.0
        for e, c in zip(self.signature.eps, xs):
            total = total + e * (c * c)
        return total

    def _field(self, profile: Profile, positive: bool, label: str) -> ScalarField:
        eps = self.signature.array

        def gradient(x: np.ndarray) -> Tuple[float, np.ndarray]:
            v, d1, _ = profile.derivatives(float(np.dot(eps, x * x)))
            return v, 2.0 * d1 * eps * x

        return ScalarField(
            self.n,
            lambda xs: profile(self.r(xs)),
            positive=positive,
            name=f"{self.name}.{label}",
            gradient=gradient,
        )

    def phi_field(self) -> ScalarField:
        return self._field(self.phi, True, "phi")

    def f_field(self) -> ScalarField:
        return self._field(self.f, False, "f")

    def distance_to_boundary(self, x: np.ndarray) -> float:
        """Distance of r(x) to the ends of the profile interval."""
        value = float(np.dot(self.signature.array, x * x))
        a, b = self.interval
        return min(value - a, b - value)

    def to_soliton_spec(self, k: int, lam: float) -> SolitonSpec:
        return SolitonSpec(
            n=self.n,
            k=k,
            lam=lam,
            signature=self.signature,
            phi=self.phi_field(),
            f=self.f_field(),
        )

    def __repr__(self) -> str:
        return (
            f"RotationAnsatz(name='{self.name}', eps={self.signature.eps}, "
            f"interval={self.interval})"
        )
