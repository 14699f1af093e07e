"""Scalar fields on R^n and soliton candidates."""

from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..types.models import Signature
from ..utils.config import get_default_config
from .exceptions import DimensionMismatchError, DomainError
from .jets import Jet, lift

FieldFunction = Callable[[List[Jet]], Union[Jet, float]]
GradientFunction = Callable[[np.ndarray], Tuple[float, np.ndarray]]


def as_point(x: Sequence[float], dim: int) -> np.ndarray:
    """
    Convert x to a float vector of the expected dimension.

    Raises:
        DimensionMismatchError: If len(x) != dim
    """
    point = np.asarray(x, dtype=float).reshape(-1)
    if point.shape[0] != dim:
        raise DimensionMismatchError(f"point has {point.shape[0]} coordinates, expected {dim}")
    return point


class ScalarField:
    """
    Smooth function of n variables evaluated through second-order jets.

    ``func`` receives a list of coordinate jets (or plain floats) and must be
    written with jet-aware arithmetic (the operators and the functions of
    ``src.tensor.jets``). A constant field may simply return a number.
    """

    def __init__(
        self,
        dim: int,
        func: FieldFunction,
        positive: bool = False,
        name: str = "field",
        gradient: Optional[GradientFunction] = None,
    ):
        """
        Initialize ScalarField.

        Args:
            dim: Number of variables
            func: Jet-aware evaluator
            positive: Whether the value must be > 0 at every queried point
            name: Label used in error messages
            gradient: Optional first-order fast path x -> (value, gradient)
        """
        if dim < 1:
            raise DimensionMismatchError(f"field dimension must be positive, got {dim}")
        self.dim = dim
        self.func = func
        self.positive = positive
        self.name = name
        self._gradient = gradient

    @classmethod
    def constant(
        cls, dim: int, value: float, positive: bool = False, name: str = "const"
    ) -> "ScalarField":
        return cls(
            dim,
            lambda xs: float(value),
            positive=positive,
            name=name,
            gradient=lambda x: (float(value), np.zeros(dim)),
        )

    def _check(self, value: float, point: np.ndarray) -> None:
        if self.positive and not value > 0.0:
            raise DomainError(f"{self.name} must be positive, got {value} at x={point.tolist()}")

    def jet(self, x: Sequence[float]) -> Jet:
        """
        Evaluate value, gradient and Hessian at x.

        Raises:
            DimensionMismatchError: If x has the wrong length
            DomainError: If a positive field is not positive at x
        """
        point = as_point(x, self.dim)
        result = lift(self.func(Jet.variables(point)), self.dim)
        self._check(result.value, point)
        return result

    def value(self, x: Sequence[float]) -> float:
        point = as_point(x, self.dim)
        result = self.func([float(c) for c in point])
        value = result.value if isinstance(result, Jet) else float(result)
        self._check(value, point)
        return value

    def value_and_gradient(self, x: Sequence[float]) -> Tuple[float, np.ndarray]:
        """First-order evaluation (uses the fast path when one was supplied)."""
        if self._gradient is None:
            j = self.jet(x)
            return j.value, j.grad
        point = as_point(x, self.dim)
        value, grad = self._gradient(point)
        self._check(value, point)
        return float(value), np.asarray(grad, dtype=float)

    def __call__(self, x: Sequence[float]) -> Jet:
        return self.jet(x)

    def __repr__(self) -> str:
        return f"ScalarField(name='{self.name}', dim={self.dim}, positive={self.positive})"


def central_differences(
    field: ScalarField, x: Sequence[float], step: Optional[float] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Central finite-difference gradient and Hessian (test oracle).

    Args:
        field: Field to differentiate
        x: Evaluation point
        step: Relative step (default: configured FD step, 1e-5)

    Returns:
        (gradient, Hessian) estimates; per-coordinate step max(step, step * |x_i|)
    """
    rel = step if step is not None else get_default_config().fd_step
    point = as_point(x, field.dim)
    n = field.dim
    h = np.maximum(rel, rel * np.abs(point))
    grad = np.zeros(n)
    hess = np.zeros((n, n))
    f0 = field.value(point)
    for i in range(n):
        ei = np.zeros(n)
        ei[i] = h[i]
        fp, fm = field.value(point + ei), field.value(point - ei)
        grad[i] = (fp - fm) / (2 * h[i])
        hess[i, i] = (fp - 2 * f0 + fm) / (h[i] * h[i])
        for j in range(i + 1, n):
            ej = np.zeros(n)
            ej[j] = h[j]
            mixed = (
                field.value(point + ei + ej)
                - field.value(point + ei - ej)
                - field.value(point - ei + ej)
                + field.value(point - ei - ej)
            ) / (4 * h[i] * h[j])
            hess[i, j] = hess[j, i] = mixed
    return grad, hess


class SolitonSpec(BaseModel):
    """One candidate soliton (n, k, lambda, signature, phi, f)."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(ge=2, description="Dimension")
    k: int = Field(ge=1, description="Curvature order")
    lam: float = Field(description="Soliton constant lambda")
    signature: Signature = Field(description="Background signature")
    phi: ScalarField = Field(description="Conformal factor (positive)")
    f: ScalarField = Field(description="Potential function")

    @model_validator(mode="after")
    def _consistent(self) -> "SolitonSpec":
        if self.k > self.n:
            raise ValueError(f"k must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")
        if not (self.phi.dim == self.f.dim == self.signature.n == self.n):
            raise ValueError(
                f"dimension mismatch: n={self.n}, signature={self.signature.n}, "
                f"phi={self.phi.dim}, f={self.f.dim}"
            )
        if not self.phi.positive:
            raise ValueError("phi must be flagged positivity-required")
        return self

    def with_potential(self, f: ScalarField) -> "SolitonSpec":
        """Copy with another potential (sign-variant ledgers)."""
        return SolitonSpec(
            n=self.n, k=self.k, lam=self.lam, signature=self.signature, phi=self.phi, f=f
        )
