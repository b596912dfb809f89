"""Distance-based indices derived from the path counts.

The Wiener index is the total distance over unordered vertex pairs, the
average distance divides it by the number of pairs, and the
``sigma``-medium domination number is the share of pairs at distance at
most ``sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .exact_arith import binomial, exact_div, ratio
from .model import (
    DendrimerParams,
    diameter,
    edge_count,
    leaf_count,
    vertex_count,
)
from .paths import (
    PathLengthTable,
    even_length_term,
    odd_length_term,
    path_count_closed,
    path_count_table,
)

__all__ = [
    "InconsistencyError",
    "IndexReport",
    "total_distance_from_counts",
    "wiener_closed",
    "wiener_from_counts",
    "average_distance",
    "sigma_sum",
    "sigma_sum_closed",
    "medium_domination",
    "index_report",
]


class InconsistencyError(AssertionError):
    """Two independent routes to the same quantity disagreed."""


def total_distance_from_counts(table: Mapping[int, int]) -> int:
    """Sum of ``length * count`` over a distance histogram of any tree."""
    return sum(ell * count for ell, count in table.items())


def wiener_closed(p: DendrimerParams) -> int:
    """Wiener index of T(n,k), k >= 3, from the cubic-denominator closed form."""
    if p.k < 3:
        raise ValueError("wiener_closed needs k >= 3; use wiener_from_counts for k = 2")
    n, k = p.n, p.k
    # the first product is negative for small n, k (e.g. -24 at (1, 3)), so
    # only the completed numerator is required to be nonnegative
    numer = (k - 1) ** (2 * n) * (n * k**3 - 2 * (n + 1) * k**2 + k)
    numer += 2 * k**2 * (k - 1) ** n - k
    value = exact_div(numer, (k - 2) ** 3)
    if value < 0:
        raise InconsistencyError(f"negative Wiener index {value} for {p}")
    return value


def wiener_from_counts(p: DendrimerParams) -> int:
    return total_distance_from_counts(path_count_table(p))


def average_distance(p: DendrimerParams) -> Fraction:
    return ratio(wiener_from_counts(p), binomial(vertex_count(p), 2))


def _check_sigma(p: DendrimerParams, sigma: int) -> None:
    if not 2 <= sigma <= diameter(p):
        raise ValueError(f"sigma must be in [2, {diameter(p)}] for T({p.n},{p.k}), got {sigma}")


def sigma_sum(p: DendrimerParams, sigma: int, verify: bool = False) -> int:
    """Number of paths of length at most ``sigma``.

    With ``verify=True`` the direct sum is also compared against
    :func:`sigma_sum_closed` and an :class:`InconsistencyError` is raised on
    any mismatch.
    """
    _check_sigma(p, sigma)
    direct = sum(path_count_closed(p, ell) for ell in range(1, sigma + 1))
    if verify and not p.is_path:
        closed = sigma_sum_closed(p, sigma)
        if closed != direct:
            raise InconsistencyError(
                f"sigma sum mismatch for {p}, sigma={sigma}: direct {direct}, piecewise {closed}"
            )
    return direct


def sigma_sum_closed(p: DendrimerParams, sigma: int) -> int:
    """Piecewise two-sum form, odd lengths ``2i+1`` for ``i <= s`` plus even ``2i``.

    ``s`` is ``sigma // 2`` for odd ``sigma`` and ``sigma // 2 - 1`` for even.
    """
    _check_sigma(p, sigma)
    if p.is_path:
        raise ValueError("sigma_sum_closed needs k >= 3")
    half = sigma // 2
    s = half if sigma % 2 else half - 1
    odd = sum(odd_length_term(p, i) for i in range(s + 1))
    even = sum(even_length_term(p, i) for i in range(1, half + 1))
    return odd + even


def medium_domination(p: DendrimerParams, sigma: int, verify: bool = False) -> Fraction:
    return ratio(sigma_sum(p, sigma, verify=verify), binomial(vertex_count(p), 2))


@dataclass(frozen=True)
class IndexReport:
    params: DendrimerParams
    vertices: int
    edges: int
    leaves: int
    table: PathLengthTable
    wiener: int
    average_distance: Fraction
    # closed-form Wiener index, None for k = 2 where it is undefined
    wiener_closed: Optional[int] = None
    medium_domination: list[tuple[int, Fraction]] = field(default_factory=list)


def index_report(
    p: DendrimerParams,
    sigmas: Optional[list[int]] = None,
    verify: bool = True,
) -> IndexReport:
    """Assemble every index for T(n,k).

    With ``verify`` the two Wiener routes and the two sigma-sum routes are
    compared and any disagreement raises :class:`InconsistencyError`.
    """
    table = path_count_table(p)
    wiener = total_distance_from_counts(table)
    closed = None if p.is_path else wiener_closed(p)
    if verify and closed is not None and closed != wiener:
        raise InconsistencyError(f"Wiener mismatch for {p}: closed {closed}, counts {wiener}")
    pairs = binomial(vertex_count(p), 2)
    meddom = []
    if sigmas:
        # running prefix sum over the table rather than re-summing per sigma
        running = 0
        prefix = {}
        for ell, count in table.items():
            running += count
            prefix[ell] = running
        for sigma in sorted(set(sigmas)):
            _check_sigma(p, sigma)
            if verify and not p.is_path and sigma_sum_closed(p, sigma) != prefix[sigma]:
                raise InconsistencyError(f"sigma sum mismatch for {p}, sigma={sigma}")
            meddom.append((sigma, ratio(prefix[sigma], pairs)))
    return IndexReport(
        params=p,
        vertices=vertex_count(p),
        edges=edge_count(p),
        leaves=leaf_count(p),
        table=table,
        wiener=wiener,
        average_distance=ratio(wiener, pairs),
        wiener_closed=closed,
        medium_domination=meddom,
    )
