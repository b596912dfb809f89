"""Counts of paths of every length in T(n,k).

Notation used throughout: ``n_l`` is the number of paths with ``l`` edges,
``n1_l`` the number of those with exactly one leaf endpoint and ``n2_l``
the number with two leaf endpoints. In a tree a path of length ``l`` is the
same thing as an unordered vertex pair at distance ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .exact_arith import binomial, exact_div
from .model import DendrimerParams, diameter, leaf_count, vertex_count

__all__ = [
    "PathLengthTable",
    "IdentityReport",
    "n1_leaf_paths",
    "n2_leaf_paths",
    "odd_length_term",
    "even_length_term",
    "path_count_closed",
    "path_count_recursive",
    "path_count_table",
    "identity_check",
]


def _check_length(ell: int) -> None:
    if ell < 1:
        raise ValueError(f"path length must be >= 1, got {ell}")


def _require_branching(p: DendrimerParams, what: str) -> None:
    if p.k < 3:
        raise ValueError(f"{what} needs k >= 3 (k = 2 is the path case), got k={p.k}")


def n1_leaf_paths(p: DendrimerParams, ell: int) -> int:
    """Paths of length ``ell`` with exactly one leaf endpoint.

    From any leaf there are ``(k-1)**((ell-1)//2)`` such paths, so the total
    is ``leaves * (k-1)**((ell-1)//2)``. At ``ell == 2n`` every path runs
    leaf to leaf through the root, hence zero there and beyond.
    """
    _check_length(ell)
    _require_branching(p, "n1_leaf_paths")
    n, k = p.n, p.k
    if ell >= 2 * n:
        return 0
    if ell % 2 == 0:
        return k * (k - 1) ** (n + ell // 2 - 2)
    return k * (k - 1) ** (n + (ell - 1) // 2 - 1)


def n2_leaf_paths(p: DendrimerParams, ell: int) -> int:
    """Paths of length ``ell`` joining two leaves.

    Both leaves sit on level n so ``ell`` is even and the midpoint lies on
    level ``n - ell/2``. The root is the midpoint only when ``ell == 2n``.
    """
    _check_length(ell)
    _require_branching(p, "n2_leaf_paths")
    n, k = p.n, p.k
    if ell % 2 or ell > 2 * n:
        return 0
    if ell == 2 * n:
        return (k - 1) ** (ell - 2) * binomial(k, 2)
    return k * (k - 1) ** (n + ell // 2 - 3) * binomial(k - 1, 2)


def odd_length_term(p: DendrimerParams, i: int) -> int:
    """Closed-form count of paths of length ``2i + 1`` (``0 <= i <= n-1``)."""
    _require_branching(p, "odd_length_term")
    n, k = p.n, p.k
    if not 0 <= i <= n - 1:
        raise ValueError(f"odd term index must be in [0, {n - 1}], got {i}")
    return k * (k - 1) ** i * exact_div((k - 1) ** n - (k - 1) ** i, k - 2)


def even_length_term(p: DendrimerParams, i: int) -> int:
    """Closed-form count of paths of length ``2i`` (``1 <= i <= n``)."""
    _require_branching(p, "even_length_term")
    n, k = p.n, p.k
    if not 1 <= i <= n:
        raise ValueError(f"even term index must be in [1, {n}], got {i}")
    # k(k-1) is even, so the halving is exact before the (k-2) division
    return exact_div(k * (k - 1) ** (2 * i - 1), 2) * exact_div(
        k * (k - 1) ** (n - i) - 2, k - 2
    )


def path_count_closed(p: DendrimerParams, ell: int) -> int:
    """Number of paths of length ``ell`` in T(n,k), in closed form.

    Lengths past the diameter give 0. For ``k == 2`` the tree is a path on
    2n+1 vertices and the count is ``2n + 1 - ell``.
    """
    _check_length(ell)
    if ell > diameter(p):
        return 0
    if p.is_path:
        return 2 * p.n + 1 - ell
    if ell % 2:
        return odd_length_term(p, (ell - 1) // 2)
    return even_length_term(p, ell // 2)


def path_count_recursive(p: DendrimerParams, ell: int) -> int:
    """Number of paths of length ``ell`` by growing T(1,k) one level at a time.

    T(m,k) arises from T(m-1,k) by hanging k-1 new leaves on every old leaf.
    A new path of length ``ell`` is an old path of length ``ell - 1`` or
    ``ell - 2`` ending at old leaves, extended at one or both ends:

    * even ``ell``: ``(k-1)*n1_{ell-1} + (k-1)**2 * n2_{ell-2}``
    * odd ``ell``:  ``(k-1)*n1_{ell-1} + 2*(k-1) * n2_{ell-1}``

    with the leaf counts taken in T(m-1,k). The degenerate length-0 old path
    (a single old leaf) is not covered by those terms and is added
    separately: it yields ``(k-1)`` new edges per old leaf at ``ell == 1`` and
    ``C(k-1, 2)`` new sibling pairs per old leaf at ``ell == 2``.
    """
    _check_length(ell)
    _require_branching(p, "path_count_recursive")
    k = p.k
    # anchor: T(1,k) is the star K_{1,k}
    count = {1: k, 2: binomial(k, 2)}.get(ell, 0)
    for m in range(2, p.n + 1):
        if ell > 2 * m:
            continue
        prev = DendrimerParams(m - 1, k)
        grown = 0
        if ell >= 2:
            grown += (k - 1) * n1_leaf_paths(prev, ell - 1)
            if ell % 2 == 0:
                if ell >= 4:
                    grown += (k - 1) ** 2 * n2_leaf_paths(prev, ell - 2)
            else:
                grown += 2 * (k - 1) * n2_leaf_paths(prev, ell - 1)
        if ell == 1:
            grown += (k - 1) * leaf_count(prev)
        elif ell == 2:
            grown += binomial(k - 1, 2) * leaf_count(prev)
        count += grown
    return count


@dataclass(frozen=True)
class PathLengthTable:
    """Path counts ``counts[l]`` for every length ``1 <= l <= 2n``."""

    params: DendrimerParams
    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, ell: int) -> int:
        return self.counts[ell]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def items(self):
        return self.counts.items()

    def total(self) -> int:
        return sum(self.counts.values())


def path_count_table(p: DendrimerParams) -> PathLengthTable:
    counts = {ell: path_count_closed(p, ell) for ell in range(1, diameter(p) + 1)}
    return PathLengthTable(p, counts)


@dataclass(frozen=True)
class IdentityReport:
    params: DendrimerParams
    pairs: int
    path_total: int

    @property
    def holds(self) -> bool:
        return self.pairs == self.path_total

    def __bool__(self) -> bool:
        return self.holds


def identity_check(p: DendrimerParams) -> IdentityReport:
    """Two-way count of vertex pairs: C(|V|, 2) against the sum of all n_l.

    The right side is summed as odd lengths ``2i+1`` for ``i = 0..n-1`` plus
    even lengths ``2i`` for ``i = 1..n``.
    """
    pairs = binomial(vertex_count(p), 2)
    if p.is_path:
        total = sum(path_count_closed(p, ell) for ell in range(1, diameter(p) + 1))
    else:
        total = sum(odd_length_term(p, i) for i in range(p.n))
        total += sum(even_length_term(p, i) for i in range(1, p.n + 1))
    return IdentityReport(p, pairs, total)
