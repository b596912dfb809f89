"""Brute-force ground truth on explicitly built trees.

Everything here works on the actual graph: breadth-first traversals from
every vertex, endpoint classification by degree and pairwise distance sums.
None of it uses the closed-form counts, so it can be used to check them.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .model import DendrimerParams, vertex_count

__all__ = [
    "DEFAULT_MAX_VERTICES",
    "OracleSizeError",
    "TreeValidationError",
    "TreeGraph",
    "EndpointBreakdown",
    "max_vertices",
    "build_dendrimer",
    "random_tree",
    "distance_histogram",
    "endpoint_breakdowns",
    "endpoint_breakdown",
    "wiener_brute",
    "export_edge_list",
    "export_dot",
]

DEFAULT_MAX_VERTICES = 10**7
MAX_VERTICES_ENV = "DENDRO_MAX_VERTICES"


class OracleSizeError(ValueError):
    """The requested explicit tree would exceed the vertex safety cap."""


class TreeValidationError(ValueError):
    """An edge set does not describe a single tree."""


def max_vertices() -> int:
    """Safety cap on explicit trees, overridable via ``DENDRO_MAX_VERTICES``."""
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_VERTICES
    raw = raw.strip()
    if not raw.isdigit():
        raise ValueError(f"{MAX_VERTICES_ENV} must be a positive decimal integer, got {raw!r}")
    return int(raw)


@dataclass(frozen=True)
class TreeGraph:
    """Immutable rooted tree with vertices ``0..V-1`` and root 0.

    ``adjacency[v]`` is the sorted neighbour tuple of ``v`` and ``level[v]``
    its distance from the root. ``params`` is set when the tree was built as
    a dendrimer.
    """

    adjacency: tuple[tuple[int, ...], ...]
    level: tuple[int, ...]
    params: Optional[DendrimerParams] = None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        num_vertices: Optional[int] = None,
        params: Optional[DendrimerParams] = None,
    ) -> "TreeGraph":
        """Validate an edge set as a tree on ``0..V-1`` and root it at 0."""
        edges = list(edges)
        if num_vertices is None:
            num_vertices = 1 + max((max(e) for e in edges), default=0)
        if num_vertices < 1:
            raise TreeValidationError("a tree needs at least one vertex")

        parent = list(range(num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        adj: list[list[int]] = [[] for _ in range(num_vertices)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < num_vertices:
                    raise TreeValidationError(f"vertex {x} outside 0..{num_vertices - 1}")
            if u == v:
                raise TreeValidationError(f"self-loop at vertex {u}")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise TreeValidationError(f"edge {u} {v} closes a cycle: {u} and {v} are already connected")
            parent[ru] = rv
            adj[u].append(v)
            adj[v].append(u)

        root = find(0)
        stray = sorted({find(v) for v in range(num_vertices)} - {root})
        if stray:
            members = [v for v in range(num_vertices) if find(v) == stray[0]]
            shown = " ".join(map(str, members[:10])) + (" ..." if len(members) > 10 else "")
            raise TreeValidationError(
                f"graph is disconnected: {len(stray) + 1} components; "
                f"component not containing root 0 has vertices {shown}"
            )

        adjacency = tuple(tuple(sorted(a)) for a in adj)
        return cls(adjacency, tuple(_bfs(adjacency, 0)), params)

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, ascending."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def degree_census(self) -> Counter:
        return Counter(len(a) for a in self.adjacency)


@dataclass(frozen=True)
class EndpointBreakdown:
    length: int
    neither_leaf: int = 0
    one_leaf: int = 0
    both_leaves: int = 0

    @property
    def total(self) -> int:
        return self.neither_leaf + self.one_leaf + self.both_leaves


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def build_dendrimer(p: DendrimerParams, cap: Optional[int] = None) -> TreeGraph:
    """Grow T(n,k) level by level from a single root.

    Labels are breadth-first: root 0, then each level in order with the
    children of lower-numbered parents first.
    """
    cap = max_vertices() if cap is None else cap
    size = vertex_count(p)
    if size > cap:
        raise OracleSizeError(
            f"T({p.n},{p.k}) has {size} vertices, above the safety cap of {cap}; "
            f"raise {MAX_VERTICES_ENV} to allow it"
        )
    edges: list[tuple[int, int]] = []
    frontier = [0]
    next_id = 1
    for depth in range(p.n):
        branching = p.k if depth == 0 else p.k - 1
        nxt = []
        for parent in frontier:
            for _ in range(branching):
                edges.append((parent, next_id))
                nxt.append(next_id)
                next_id += 1
        frontier = nxt
    return TreeGraph.from_edges(edges, num_vertices=next_id, params=p)


def random_tree(num_vertices: int, seed: int) -> TreeGraph:
    """Uniform-attachment random tree: vertex ``i`` joins a uniform earlier vertex."""
    if num_vertices < 1:
        raise ValueError("num_vertices must be >= 1")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, num_vertices)]
    return TreeGraph.from_edges(edges, num_vertices=num_vertices)


def distance_histogram(g: TreeGraph) -> dict[int, int]:
    """Number of unordered vertex pairs at each distance, keyed ascending."""
    hist: Counter = Counter()
    for s in range(g.num_vertices):
        dist = _bfs(g.adjacency, s)
        hist.update(dist[s + 1:])
    return dict(sorted(hist.items()))


def endpoint_breakdowns(g: TreeGraph) -> dict[int, EndpointBreakdown]:
    """Classify every pair at every distance by how many endpoints are leaves."""
    leaf = [int(g.is_leaf(v)) for v in range(g.num_vertices)]
    tally: Counter = Counter()
    for s in range(g.num_vertices):
        dist = _bfs(g.adjacency, s)
        ls = leaf[s]
        tally.update((d, ls + lt) for d, lt in zip(dist[s + 1:], leaf[s + 1:]))
    lengths = sorted({d for d, _ in tally})
    return {
        d: EndpointBreakdown(d, tally[(d, 0)], tally[(d, 1)], tally[(d, 2)]) for d in lengths
    }


def endpoint_breakdown(g: TreeGraph, ell: int) -> EndpointBreakdown:
    if ell < 1:
        raise ValueError(f"path length must be >= 1, got {ell}")
    return endpoint_breakdowns(g).get(ell, EndpointBreakdown(ell))


def wiener_brute(g: TreeGraph) -> int:
    """Sum of d(u, v) over all unordered pairs.

    Distances come from root paths, ``d = level[u] + level[v] - 2*level[lca]``,
    rather than from the traversal used by :func:`distance_histogram`.
    """
    level = g.level
    parent = [-1] * g.num_vertices
    for v in range(g.num_vertices):
        for w in g.adjacency[v]:
            if level[w] == level[v] - 1:
                parent[v] = w
    total = 0
    for u in range(g.num_vertices):
        # ancestors of u (including u) -> their level
        anc = {}
        x = u
        while x >= 0:
            anc[x] = level[x]
            x = parent[x]
        lu = level[u]
        for v in range(u + 1, g.num_vertices):
            y = v
            while y not in anc:
                y = parent[y]
            total += lu + level[v] - 2 * anc[y]
    return total


def export_edge_list(g: TreeGraph) -> str:
    lines = []
    if g.params is not None:
        lines.append(f"# dendrimer n={g.params.n} k={g.params.k} V={g.num_vertices}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def export_dot(g: TreeGraph) -> str:
    name = "tree" if g.params is None else f"T_{g.params.n}_{g.params.k}"
    body = "".join(f"  {u} -- {v};\n" for u, v in g.edges())
    return f"graph {name} {{\n{body}}}\n"
