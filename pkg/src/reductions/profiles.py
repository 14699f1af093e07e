"""One-dimensional profiles phi(t), f(t) with first and second derivatives."""

import math
from abc import ABC, abstractmethod
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial

from ..tensor.jets import Jet, lift
from .exceptions import ProfileDomainError, ReductionInputError

Derivatives = Tuple[float, float, float]


class Profile(ABC):
    """A smooth function of one variable usable inside jet arithmetic."""

    def __init__(
        self, name: str = "profile", interval: Tuple[float, float] = (-math.inf, math.inf)
    ):
        self.name = name
        self.interval = interval

    def _check(self, t: float) -> None:
        a, b = self.interval
        if not a < t < b:
            raise ProfileDomainError(f"{self.name} evaluated at {t} outside ({a}, {b})")

    @abstractmethod
    def derivatives(self, t: float) -> Derivatives:
        """Return (value, first derivative, second derivative) at t."""

    def value(self, t: float) -> float:
        return self.derivatives(t)[0]

    def __call__(self, s: Union[Jet, float]) -> Union[Jet, float]:
        """Compose with a jet by the chain rule, or evaluate at a float."""
        if isinstance(s, Jet):
            v, d1, d2 = self.derivatives(s.value)
            return s.chain(v, d1, d2)
        return self.value(float(s))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name='{self.name}', interval={self.interval})"


class AnalyticProfile(Profile):
    """Closed-form profile given by a jet-aware function of one variable."""

    def __init__(
        self,
        func: Callable[[Union[Jet, float]], Union[Jet, float]],
        name: str = "profile",
        interval: Tuple[float, float] = (-math.inf, math.inf),
    ):
        super().__init__(name, interval)
        self.func = func

    @classmethod
    def constant(cls, value: float, name: str = "const") -> "AnalyticProfile":
        return cls(lambda s: float(value), name=name)

    def derivatives(self, t: float) -> Derivatives:
        self._check(t)
        j = lift(self.func(Jet.variables([t])[0]), 1)
        return j.value, float(j.grad[0]), float(j.hess[0, 0])

    def value(self, t: float) -> float:
        self._check(t)
        result = self.func(float(t))
        return result.value if isinstance(result, Jet) else float(result)

    def __call__(self, s: Union[Jet, float]) -> Union[Jet, float]:
        if isinstance(s, Jet):
            self._check(s.value)
            return lift(self.func(s), s.dim)
        return self.value(float(s))


class TabulatedProfile(Profile):
    """
    Profile interpolated from a table by local quintic fits.

    Each query fits a degree-5 polynomial to the 7 grid nodes closest to t
    and differentiates it. When a slope column is supplied (tables written by
    the implicit solver carry the exact phi'), first and second derivatives
    come from the fit of the slopes instead.
    """

    STENCIL = 7
    DEGREE = 5

    def __init__(
        self,
        grid: Sequence[float],
        values: Sequence[float],
        name: str = "table",
        slopes: Optional[Sequence[float]] = None,
    ):
        xs = np.asarray(grid, dtype=float)
        ys = np.asarray(values, dtype=float)
        ds = None if slopes is None else np.asarray(slopes, dtype=float)
        mismatched = ds is not None and ds.shape != xs.shape
        if xs.shape != ys.shape or xs.size < self.STENCIL or mismatched:
            raise ReductionInputError(
                f"table needs matching columns with at least {self.STENCIL} rows, "
                f"got {xs.size} and {ys.size}"
            )
        if not np.all(np.diff(xs) > 0):
            raise ReductionInputError("table grid must be strictly increasing")
        super().__init__(name, (float(xs[0]), float(xs[-1])))
        self.grid = xs
        self.values = ys
        self.slopes = ds

    def _check(self, t: float) -> None:
        a, b = self.interval
        if not a <= t <= b:
            raise ProfileDomainError(f"{self.name} evaluated at {t} outside table [{a}, {b}]")

    def derivatives(self, t: float) -> Derivatives:
        self._check(t)
        index = int(np.searchsorted(self.grid, t))
        start = min(max(index - self.STENCIL // 2, 0), self.grid.size - self.STENCIL)
        window = slice(start, start + self.STENCIL)
        poly = Polynomial.fit(self.grid[window], self.values[window], self.DEGREE)
        if self.slopes is None:
            return float(poly(t)), float(poly.deriv(1)(t)), float(poly.deriv(2)(t))
        slope = Polynomial.fit(self.grid[window], self.slopes[window], self.DEGREE)
        return float(poly(t)), float(slope(t)), float(slope.deriv(1)(t))
