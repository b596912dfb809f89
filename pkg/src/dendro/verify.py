"""Cross-checks between closed forms, the recursion and the brute-force oracle.

Each ``check_*`` function sweeps a set of (n, k) cells and returns a
:class:`CheckResult` holding the number of instances compared and the first
counterexample, if any. Formula modules are looked up at call time so a test
can patch one and watch the sweep catch it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import indices, model, oracle, paths
from .exact_arith import binomial
from .model import DendrimerParams

__all__ = [
    "Mismatch",
    "CheckResult",
    "OracleCache",
    "grid",
    "check_census",
    "check_closed_vs_oracle",
    "check_recursive_vs_closed",
    "check_leaf_endpoint_counts",
    "check_pair_identity",
    "check_wiener",
    "check_total_distance_random_trees",
    "check_average_distance",
    "check_medium_domination",
    "run_verification",
]

DEFAULT_ORACLE_MAX_VERTICES = 2000


@dataclass(frozen=True)
class Mismatch:
    n: Optional[int]
    k: Optional[int]
    ell: Optional[int]
    what: str
    expected: object
    got: object

    def __str__(self) -> str:
        return (
            f"{self.what}: n={self.n} k={self.k} ell={self.ell} "
            f"expected={self.expected} got={self.got}"
        )


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def compare(self, expected, got, what: str, n=None, k=None, ell=None) -> bool:
        """Count one instance; record the first mismatch. Returns True on agreement."""
        self.instances += 1
        if expected == got:
            return True
        if self.mismatch is None:
            self.mismatch = Mismatch(n, k, ell, what, expected, got)
        return False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.instances} instances)"
        if self.mismatch is not None:
            text += f" first counterexample: {self.mismatch}"
        return text


def grid(max_n: int, max_k: int, min_n: int = 1, min_k: int = 2) -> list[DendrimerParams]:
    """All (n, k) cells in lexicographic order."""
    return [
        DendrimerParams(n, k)
        for n in range(min_n, max_n + 1)
        for k in range(min_k, max_k + 1)
    ]


class OracleCache:
    """Builds each explicit tree once and memoises its brute-force results."""

    def __init__(self, max_vertices: int = DEFAULT_ORACLE_MAX_VERTICES) -> None:
        self.max_vertices = max_vertices
        self._graphs: dict[DendrimerParams, oracle.TreeGraph] = {}
        self._hist: dict[DendrimerParams, dict[int, int]] = {}
        self._breakdown: dict[DendrimerParams, dict] = {}
        self._wiener: dict[DendrimerParams, int] = {}

    def admits(self, p: DendrimerParams) -> bool:
        return model.vertex_count(p) <= self.max_vertices

    def graph(self, p: DendrimerParams) -> oracle.TreeGraph:
        if p not in self._graphs:
            self._graphs[p] = oracle.build_dendrimer(p, cap=self.max_vertices)
        return self._graphs[p]

    def histogram(self, p: DendrimerParams) -> dict[int, int]:
        if p not in self._hist:
            self._hist[p] = oracle.distance_histogram(self.graph(p))
        return self._hist[p]

    def breakdowns(self, p: DendrimerParams) -> dict:
        if p not in self._breakdown:
            self._breakdown[p] = oracle.endpoint_breakdowns(self.graph(p))
        return self._breakdown[p]

    def wiener(self, p: DendrimerParams) -> int:
        if p not in self._wiener:
            self._wiener[p] = oracle.wiener_brute(self.graph(p))
        return self._wiener[p]


def _oracle_cells(cells: Iterable[DendrimerParams], cache: OracleCache) -> list[DendrimerParams]:
    return [p for p in cells if cache.admits(p)]


def check_census(cells: Iterable[DendrimerParams], cache: OracleCache) -> CheckResult:
    res = CheckResult("census formulas vs explicit tree")
    for p in _oracle_cells(cells, cache):
        g = cache.graph(p)
        degrees = g.degree_census()
        res.compare(g.num_vertices, model.vertex_count(p), "vertex_count", p.n, p.k)
        res.compare(g.num_edges, model.edge_count(p), "edge_count", p.n, p.k)
        res.compare(degrees[1], model.leaf_count(p), "leaf_count", p.n, p.k)
        res.compare(degrees[p.k], model.internal_vertex_count(p), "internal_vertex_count", p.n, p.k)
        res.compare(max(g.level), p.n, "radius", p.n, p.k)
        res.compare(max(cache.histogram(p)), model.diameter(p), "diameter", p.n, p.k)
    return res


def check_closed_vs_oracle(cells: Iterable[DendrimerParams], cache: OracleCache) -> CheckResult:
    res = CheckResult("closed-form path counts vs oracle histogram")
    for p in _oracle_cells(cells, cache):
        hist = cache.histogram(p)
        for ell in range(1, model.diameter(p) + 2):
            res.compare(hist.get(ell, 0), paths.path_count_closed(p, ell), "n_l", p.n, p.k, ell)
    return res


def check_recursive_vs_closed(cells: Iterable[DendrimerParams]) -> CheckResult:
    res = CheckResult("recursive path counts vs closed form")
    for p in cells:
        if p.k < 3:
            continue
        for ell in range(1, model.diameter(p) + 2):
            res.compare(
                paths.path_count_closed(p, ell),
                paths.path_count_recursive(p, ell),
                "n_l recursive",
                p.n, p.k, ell,
            )
    return res


def check_leaf_endpoint_counts(cells: Iterable[DendrimerParams], cache: OracleCache) -> CheckResult:
    res = CheckResult("leaf-endpoint counts vs oracle classification")
    for p in _oracle_cells(cells, cache):
        if p.k < 3:
            continue
        table = cache.breakdowns(p)
        hist = cache.histogram(p)
        for ell in range(1, model.diameter(p) + 1):
            b = table.get(ell, oracle.EndpointBreakdown(ell))
            res.compare(hist.get(ell, 0), b.total, "endpoint partition", p.n, p.k, ell)
            res.compare(b.one_leaf, paths.n1_leaf_paths(p, ell), "n1_l", p.n, p.k, ell)
            res.compare(b.both_leaves, paths.n2_leaf_paths(p, ell), "n2_l", p.n, p.k, ell)
    return res


def check_pair_identity(cells: Iterable[DendrimerParams]) -> CheckResult:
    res = CheckResult("pair count equals total path count")
    for p in cells:
        report = paths.identity_check(p)
        res.compare(report.pairs, report.path_total, "C(V,2) vs sum n_l", p.n, p.k)
        table_total = paths.path_count_table(p).total()
        res.compare(report.pairs, table_total, "C(V,2) vs table total", p.n, p.k)
    return res


def check_wiener(cells: Iterable[DendrimerParams], cache: OracleCache) -> CheckResult:
    res = CheckResult("Wiener index: closed form vs path-count sum vs oracle")
    for p in cells:
        from_counts = indices.wiener_from_counts(p)
        if p.k >= 3:
            res.compare(indices.wiener_closed(p), from_counts, "wiener closed vs counts", p.n, p.k)
        if cache.admits(p):
            res.compare(cache.wiener(p), from_counts, "wiener brute vs counts", p.n, p.k)
    return res


def check_total_distance_random_trees(
    count: int = 200, max_vertices: int = 200, seed: int = 0
) -> CheckResult:
    """Sum of length times count over the histogram equals the pairwise distance sum."""
    res = CheckResult("total distance from histogram on random trees")
    rng = random.Random(seed)
    for i in range(count):
        size = rng.randint(1, max_vertices)
        tree_seed = rng.randrange(2**32)
        g = oracle.random_tree(size, tree_seed)
        hist = oracle.distance_histogram(g)
        res.compare(
            oracle.wiener_brute(g),
            indices.total_distance_from_counts(hist),
            f"random tree #{i} (V={size}, seed={tree_seed})",
        )
    return res


def check_average_distance(cells: Iterable[DendrimerParams]) -> CheckResult:
    res = CheckResult("average distance consistency")
    for p in cells:
        mu = indices.average_distance(p)
        w = indices.wiener_from_counts(p)
        res.compare(w, mu * binomial(model.vertex_count(p), 2), "mu * C(V,2)", p.n, p.k)
        res.compare(True, 1 <= mu <= model.diameter(p), "1 <= mu <= 2n", p.n, p.k)
    return res


def check_medium_domination(cells: Iterable[DendrimerParams]) -> CheckResult:
    res = CheckResult("medium domination: piecewise vs direct, monotone, full at diameter")
    for p in cells:
        diam = model.diameter(p)
        previous = Fraction(0)
        for sigma in range(2, diam + 1):
            direct = indices.sigma_sum(p, sigma)
            if p.k >= 3:
                res.compare(direct, indices.sigma_sum_closed(p, sigma), "sigma sum", p.n, p.k, sigma)
            gamma = indices.medium_domination(p, sigma)
            res.compare(True, gamma >= previous, "monotone in sigma", p.n, p.k, sigma)
            previous = gamma
        res.compare(Fraction(1), indices.medium_domination(p, diam), "gamma at diameter", p.n, p.k, diam)
    return res


def run_verification(
    max_n: int,
    max_k: int,
    oracle_max_vertices: int = DEFAULT_ORACLE_MAX_VERTICES,
    random_trees: int = 200,
    random_tree_max_vertices: int = 200,
    seed: int = 0,
    progress: Optional[Callable[[CheckResult], None]] = None,
) -> list[CheckResult]:
    """Run every check family over ``1..max_n`` x ``2..max_k``.

    Oracle families only visit cells whose tree has at most
    ``oracle_max_vertices`` vertices; the instance counts show what ran.
    """
    cells = grid(max_n, max_k)
    cache = OracleCache(oracle_max_vertices)
    families = [
        lambda: check_census(cells, cache),
        lambda: check_closed_vs_oracle(cells, cache),
        lambda: check_recursive_vs_closed(cells),
        lambda: check_leaf_endpoint_counts(cells, cache),
        lambda: check_pair_identity(cells),
        lambda: check_wiener(cells, cache),
        lambda: check_total_distance_random_trees(random_trees, random_tree_max_vertices, seed),
        lambda: check_average_distance(cells),
        lambda: check_medium_domination(cells),
    ]
    results = []
    for family in families:
        result = family()
        results.append(result)
        if progress is not None:
            progress(result)
    return results
