"""Dendrimer parameters and vertex/edge census."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import exact_div

__all__ = [
    "DendrimerParams",
    "vertex_count",
    "edge_count",
    "leaf_count",
    "internal_vertex_count",
    "diameter",
]


@dataclass(frozen=True, order=True)
class DendrimerParams:
    """The pair (n, k) defining T(n,k).

    ``n`` is the radius (every leaf sits at level n) and ``k`` is the degree
    of every non-leaf vertex. ``k == 2`` gives the path on 2n+1 vertices.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        for name in ("n", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {type(value).__name__}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")

    @property
    def is_path(self) -> bool:
        return self.k == 2


def edge_count(p: DendrimerParams) -> int:
    if p.is_path:
        return 2 * p.n
    k = p.k
    return exact_div(k * ((k - 1) ** p.n - 1), k - 2)


def vertex_count(p: DendrimerParams) -> int:
    if p.is_path:
        return 2 * p.n + 1
    return 1 + edge_count(p)


def leaf_count(p: DendrimerParams) -> int:
    # k == 2 falls out of the same expression: 2 * 1**(n-1) == 2
    return p.k * (p.k - 1) ** (p.n - 1)


def internal_vertex_count(p: DendrimerParams) -> int:
    """Number of degree-k vertices (interior path vertices when k == 2)."""
    if p.is_path:
        return 2 * p.n - 1
    return exact_div(p.k * (p.k - 1) ** (p.n - 1) - 2, p.k - 2)


def diameter(p: DendrimerParams) -> int:
    return 2 * p.n
