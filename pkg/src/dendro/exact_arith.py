"""Exact integer and rational helpers.

Plain Python ``int`` carries every count (it never overflows) and
:class:`fractions.Fraction` carries every ratio (always in lowest terms).
Nothing in this package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = ["ExactDivisionError", "binomial", "geometric_sum", "exact_div", "ratio"]


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def binomial(n: int, r: int) -> int:
    """C(n, r), zero when ``n < r``."""
    if r < 0:
        raise ValueError(f"binomial: r must be >= 0, got {r}")
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    return comb(n, r)


def geometric_sum(a: int, r: int, terms: int) -> int:
    """Return ``a + a*r + ... + a*r**(terms-1)``.

    Evaluated through the closed form ``a*(r**terms - 1)/(r - 1)`` with a
    checked division. Ratios ``r <= 1`` are rejected: every caller passes
    ``r = k - 1`` with ``k >= 3``.
    """
    if r <= 1:
        raise ValueError(f"geometric_sum: ratio must be >= 2, got {r}")
    if terms < 0:
        raise ValueError(f"geometric_sum: terms must be >= 0, got {terms}")
    return exact_div(a * (r**terms - 1), r - 1)


def exact_div(a: int, b: int) -> int:
    """Divide ``a`` by ``b``, failing loudly unless ``b`` divides ``a``."""
    if b <= 0:
        raise ValueError(f"exact_div: divisor must be positive, got {b}")
    q, rem = divmod(a, b)
    if rem:
        raise ExactDivisionError(f"{a} is not divisible by {b} (remainder {rem})")
    return q


def ratio(num: int, den: int) -> Fraction:
    """Reduced fraction ``num/den`` with a strictly positive denominator."""
    if den <= 0:
        raise ValueError(f"ratio: denominator must be positive, got {den}")
    return Fraction(num, den)
