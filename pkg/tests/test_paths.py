import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendro.exact_arith import binomial
from dendro.model import DendrimerParams, edge_count, vertex_count
from dendro.paths import (
    identity_check,
    n1_leaf_paths,
    n2_leaf_paths,
    path_count_closed,
    path_count_recursive,
    path_count_table,
)
from conftest import nx_dendrimer, nx_histogram


def nx_leaf_classes(n, k):
    """{length: (neither, one, both)} by direct pair classification in networkx."""
    g = nx_dendrimer(n, k)
    lengths = dict(nx.all_pairs_shortest_path_length(g))
    out = {}
    for u, v in itertools.combinations(g.nodes, 2):
        d = lengths[u][v]
        leaves = (g.degree(u) == 1) + (g.degree(v) == 1)
        row = out.setdefault(d, [0, 0, 0])
        row[leaves] += 1
    return {d: tuple(r) for d, r in out.items()}


# frozen from nx_leaf_classes / nx_histogram on the explicit trees
T13_CLASSES = {1: (0, 3, 0), 2: (0, 0, 3)}
T23_CLASSES = {1: (3, 6, 0), 2: (3, 6, 3), 3: (0, 12, 0), 4: (0, 0, 12)}


def test_frozen_classes_match_networkx():
    assert nx_leaf_classes(1, 3) == T13_CLASSES
    assert nx_leaf_classes(2, 3) == T23_CLASSES
    assert nx_histogram(nx_dendrimer(2, 3)) == {1: 9, 2: 12, 3: 12, 4: 12}


@pytest.mark.parametrize(
    "n,k,ell,expected",
    [(1, 3, 1, T13_CLASSES[1][1]), (2, 3, 2, T23_CLASSES[2][1]), (2, 3, 3, T23_CLASSES[3][1])],
)
def test_n1_examples(n, k, ell, expected):
    assert n1_leaf_paths(DendrimerParams(n, k), ell) == expected


def test_n1_zero_at_diameter():
    # the unrestricted one-leaf formula would give 3 for the star at length 2
    assert n1_leaf_paths(DendrimerParams(1, 3), 2) == T13_CLASSES[2][1] == 0
    assert n1_leaf_paths(DendrimerParams(2, 3), 4) == 0
    assert n1_leaf_paths(DendrimerParams(2, 3), 9) == 0


@pytest.mark.parametrize(
    "n,k,ell,expected",
    [(1, 3, 2, T13_CLASSES[2][2]), (2, 3, 2, T23_CLASSES[2][2]), (2, 3, 3, 0), (2, 3, 4, 12)],
)
def test_n2_examples(n, k, ell, expected):
    assert n2_leaf_paths(DendrimerParams(n, k), ell) == expected


@pytest.mark.parametrize("fn", [n1_leaf_paths, n2_leaf_paths, path_count_recursive])
def test_leaf_formulas_reject_bad_input(fn):
    with pytest.raises(ValueError):
        fn(DendrimerParams(2, 3), 0)
    with pytest.raises(ValueError):
        fn(DendrimerParams(2, 2), 1)


@pytest.mark.parametrize(
    "n,k,ell,expected",
    [(2, 3, 2, 12), (2, 3, 4, 12), (3, 2, 4, 3), (1, 3, 1, 3), (2, 3, 5, 0), (3, 4, 7, 0)],
)
def test_closed_examples(n, k, ell, expected):
    assert path_count_closed(DendrimerParams(n, k), ell) == expected


def test_closed_rejects_nonpositive_length():
    with pytest.raises(ValueError):
        path_count_closed(DendrimerParams(2, 3), 0)


def test_recursive_examples():
    assert path_count_recursive(DendrimerParams(2, 3), 3) == 12
    assert path_count_recursive(DendrimerParams(1, 3), 2) == 3
    assert path_count_recursive(DendrimerParams(2, 3), 5) == 0


def test_recursive_short_lengths_include_single_leaf_growth():
    # length 1 and 2 gain paths from a single old leaf (new edges, new sibling pairs)
    p = DendrimerParams(2, 3)
    assert path_count_recursive(p, 1) == 9
    assert path_count_recursive(p, 2) == 12


def test_table_examples():
    assert path_count_table(DendrimerParams(2, 3)).counts == {1: 9, 2: 12, 3: 12, 4: 12}
    assert path_count_table(DendrimerParams(1, 3)).counts == {1: 3, 2: 3}
    assert path_count_table(DendrimerParams(2, 2)).counts == {1: 4, 2: 3, 3: 2, 4: 1}


def test_identity_examples():
    r = identity_check(DendrimerParams(2, 3))
    assert r.holds and r.pairs == r.path_total == binomial(10, 2) == 45
    r = identity_check(DendrimerParams(1, 3))
    assert r.holds and r.pairs == 6
    r = identity_check(DendrimerParams(4, 4))
    assert r.holds and r.pairs == binomial(161, 2)
    assert bool(identity_check(DendrimerParams(5, 4)))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(2, 5))
def test_closed_matches_networkx_histogram(n, k):
    hist = nx_histogram(nx_dendrimer(n, k))
    assert path_count_table(DendrimerParams(n, k)).counts == hist


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(3, 5))
def test_leaf_formulas_match_networkx(n, k):
    p = DendrimerParams(n, k)
    classes = nx_leaf_classes(n, k)
    for ell in range(1, 2 * n + 1):
        neither, one, both = classes[ell]
        assert n1_leaf_paths(p, ell) == one
        assert n2_leaf_paths(p, ell) == both


branching = st.builds(DendrimerParams, st.integers(1, 12), st.integers(3, 8))


@given(branching, st.data())
def test_recursive_equals_closed(p, data):
    ell = data.draw(st.integers(1, 2 * p.n + 2))
    assert path_count_recursive(p, ell) == path_count_closed(p, ell)


@given(st.builds(DendrimerParams, st.integers(1, 30), st.integers(2, 20)))
def test_table_invariants(p):
    table = path_count_table(p)
    assert list(table) == list(range(1, 2 * p.n + 1))
    assert table[1] == edge_count(p)
    assert all(c >= 1 for _, c in table.items())
    assert table.total() == binomial(vertex_count(p), 2)
    assert path_count_closed(p, 2 * p.n + 1) == 0
    assert path_count_closed(p, 2 * p.n + 2) == 0


@given(branching)
def test_diameter_count_consistent(p):
    n, k = p.n, p.k
    expected = (k - 1) ** (2 * n - 2) * binomial(k, 2)
    assert path_count_closed(p, 2 * n) == expected == n2_leaf_paths(p, 2 * n)
    assert 2 * expected == k * (k - 1) ** (2 * n - 1)
    for ell in range(1, 2 * n + 1, 2):
        assert n2_leaf_paths(p, ell) == 0


def test_literal_recursion_misses_single_leaf_growth():
    # the two parity rules alone, with zero below length 1 / 2, undercount
    # lengths 1 and 2 because growth from one old leaf has no length-0 term
    def literal(n, k, ell):
        if ell > 2 * n:
            return 0
        if n == 1:
            return {1: k, 2: binomial(k, 2)}.get(ell, 0)
        prev = DendrimerParams(n - 1, k)
        n1 = n1_leaf_paths(prev, ell - 1) if ell >= 2 else 0
        if ell % 2 == 0:
            n2 = (k - 1) ** 2 * n2_leaf_paths(prev, ell - 2) if ell >= 4 else 0
        else:
            n2 = 2 * (k - 1) * n2_leaf_paths(prev, ell - 1) if ell >= 3 else 0
        return (k - 1) * n1 + n2 + literal(n - 1, k, ell)

    p = DendrimerParams(2, 3)
    assert literal(2, 3, 1) == 3 != path_count_closed(p, 1) == 9
    assert literal(2, 3, 2) == 9 != path_count_closed(p, 2) == 12
    for n in range(1, 8):
        for ell in range(3, 2 * n + 1):
            assert literal(n, 4, ell) == path_count_closed(DendrimerParams(n, 4), ell)
