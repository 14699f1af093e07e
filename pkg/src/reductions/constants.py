"""Exact combinatorial constants of the reduced equations."""

from fractions import Fraction
from math import comb

from .exceptions import ReductionInputError


def _check(n: int, k: int) -> None:
    if n < 2 or not 1 <= k <= n:
        raise ReductionInputError(f"need n >= 2 and 1 <= k <= n, got n={n}, k={k}")


def binomial_weight(n: int, k: int) -> Fraction:
    """(n-1)! / (k! (n-k)!), the weight shared by both constants."""
    _check(n, k)
    return Fraction(comb(n, k), n)


def b_nk(n: int, k: int) -> Fraction:
    """
    Translation constant (n-1)!/(k!(n-k)!) (-1)^(k-1) 2^(1-k).

    Examples:
        >>> b_nk(4, 2)
        Fraction(-3, 4)
    """
    return binomial_weight(n, k) * (-1) ** (k - 1) / 2 ** (k - 1)


def c_nk(n: int, k: int) -> Fraction:
    """
    Rotation constant (n-1)!/(k!(n-k)!) 2^(k-1).

    Examples:
        >>> c_nk(4, 2)
        Fraction(3, 1)
    """
    return binomial_weight(n, k) * 2 ** (k - 1)
