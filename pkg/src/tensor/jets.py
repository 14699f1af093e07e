"""Second-order forward-mode jets (value, gradient, Hessian)."""

import math
from typing import List, Sequence, Union

import numpy as np

from .exceptions import DomainError

Number = Union[int, float]


class Jet:
    """
    Truncated Taylor jet of a scalar function of n variables.

    Arithmetic propagates the exact gradient and Hessian by the product and
    chain rules. Every Hessian is built from symmetric pieces only
    (scaled Hessians, ``outer(a, b) + outer(b, a)`` and ``outer(g, g)``), so
    results are symmetric bit for bit.

    Examples:
        >>> x, y = Jet.variables([1.0, 2.0])
        >>> (x * y).grad
        array([2., 1.])
    """

    __slots__ = ("value", "grad", "hess")

    def __init__(self, value: float, grad: np.ndarray, hess: np.ndarray):
        self.value = float(value)
        self.grad = grad
        self.hess = hess

    @property
    def dim(self) -> int:
        return int(self.grad.shape[0])

    @classmethod
    def variables(cls, point: Sequence[float]) -> List["Jet"]:
        """
        Seed one jet per coordinate.

        Args:
            point: Evaluation point

        Returns:
            Jets x_i with gradient e_i and zero Hessian
        """
        n = len(point)
        eye = np.eye(n)
        return [cls(point[i], eye[i].copy(), np.zeros((n, n))) for i in range(n)]

    @classmethod
    def constant(cls, value: float, dim: int) -> "Jet":
        return cls(value, np.zeros(dim), np.zeros((dim, dim)))

    def _coerce(self, other: Union["Jet", Number]) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.constant(float(other), self.dim)

    def chain(self, d0: float, d1: float, d2: float) -> "Jet":
        """
        Compose a scalar function g with this jet.

        Args:
            d0: g(value)
            d1: g'(value)
            d2: g''(value)

        Returns:
            Jet of g(self)
        """
        hess = d1 * self.hess
        if d2 != 0.0:
            hess = hess + d2 * np.outer(self.grad, self.grad)
        return Jet(d0, d1 * self.grad, hess)

    def __add__(self, other: Union["Jet", Number]) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.value + other, self.grad, self.hess)
        return Jet(self.value + other.value, self.grad + other.grad, self.hess + other.hess)

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-self.value, -self.grad, -self.hess)

    def __pos__(self) -> "Jet":
        return self

    def __sub__(self, other: Union["Jet", Number]) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.value - other, self.grad, self.hess)
        return Jet(self.value - other.value, self.grad - other.grad, self.hess - other.hess)

    def __rsub__(self, other: Number) -> "Jet":
        return Jet(other - self.value, -self.grad, -self.hess)

    def __mul__(self, other: Union["Jet", Number]) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.value * other, other * self.grad, other * self.hess)
        cross = np.outer(self.grad, other.grad)
        return Jet(
            self.value * other.value,
            self.value * other.grad + other.value * self.grad,
            self.value * other.hess + other.value * self.hess + (cross + cross.T),
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        v = self.value
        if v == 0.0:
            raise DomainError("division by a jet with zero value")
        return self.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))

    def __truediv__(self, other: Union["Jet", Number]) -> "Jet":
        if not isinstance(other, Jet):
            if other == 0:
                raise DomainError("division by zero")
            return self * (1.0 / other)
        return self * other.reciprocal()

    def __rtruediv__(self, other: Number) -> "Jet":
        return self.reciprocal() * other

    def __pow__(self, exponent: Union["Jet", Number]) -> "Jet":
        if isinstance(exponent, Jet):
            return exp(exponent * log(self))
        return power(self, exponent)

    def __rpow__(self, base: Number) -> "Jet":
        if base <= 0:
            raise DomainError(f"real power with non-positive base {base}")
        return exp(self * math.log(base))

    def __repr__(self) -> str:
        return f"Jet(value={self.value}, grad={self.grad.tolist()})"


def _real_power(base: float, exponent: float) -> float:
    try:
        result = base**exponent
    except ZeroDivisionError as e:
        raise DomainError(f"{base} ** {exponent} is undefined") from e
    if isinstance(result, complex):
        raise DomainError(f"negative base {base} under fractional power {exponent}")
    return float(result)


def power(x: Union[Jet, Number], exponent: Number) -> Union[Jet, float]:
    """
    Real power x**exponent for floats or jets.

    Integer exponents accept negative bases; fractional exponents require
    a positive base.

    Raises:
        DomainError: If the power or one of its derivatives is undefined
    """
    if not isinstance(x, Jet):
        return _real_power(float(x), exponent)
    if exponent == 0:
        return Jet.constant(1.0, x.dim)
    if exponent == 1:
        return x
    v = x.value
    d1 = exponent * _real_power(v, exponent - 1)
    d2 = 0.0 if exponent == 1 else exponent * (exponent - 1) * _real_power(v, exponent - 2)
    return x.chain(_real_power(v, exponent), d1, d2)


def exp(x: Union[Jet, Number]) -> Union[Jet, float]:
    if not isinstance(x, Jet):
        return math.exp(x)
    e = math.exp(x.value)
    return x.chain(e, e, e)


def log(x: Union[Jet, Number]) -> Union[Jet, float]:
    v = x.value if isinstance(x, Jet) else float(x)
    if v <= 0.0:
        raise DomainError(f"log of non-positive value {v}")
    if not isinstance(x, Jet):
        return math.log(v)
    return x.chain(math.log(v), 1.0 / v, -1.0 / (v * v))


def sqrt(x: Union[Jet, Number]) -> Union[Jet, float]:
    v = x.value if isinstance(x, Jet) else float(x)
    if v < 0.0 or (isinstance(x, Jet) and v == 0.0):
        raise DomainError(f"sqrt of {v} has no real jet")
    if not isinstance(x, Jet):
        return math.sqrt(v)
    s = math.sqrt(v)
    return x.chain(s, 0.5 / s, -0.25 / (s * v))


def sin(x: Union[Jet, Number]) -> Union[Jet, float]:
    if not isinstance(x, Jet):
        return math.sin(x)
    s = math.sin(x.value)
    return x.chain(s, math.cos(x.value), -s)


def cos(x: Union[Jet, Number]) -> Union[Jet, float]:
    if not isinstance(x, Jet):
        return math.cos(x)
    c = math.cos(x.value)
    return x.chain(c, -math.sin(x.value), -c)


def lift(value: Union[Jet, Number], dim: int) -> Jet:
    """Promote a plain number (constant field) to a jet."""
    if isinstance(value, Jet):
        return value
    return Jet.constant(float(value), dim)
