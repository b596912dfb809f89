import itertools

import networkx as nx
import pytest

from dendro.model import DendrimerParams


def nx_dendrimer(n: int, k: int) -> nx.Graph:
    """T(n,k) built with networkx, independently of dendro.oracle."""
    g = nx.Graph()
    g.add_node("r")
    frontier = ["r"]
    for depth in range(n):
        nxt = []
        for v in frontier:
            kids = k if depth == 0 else k - 1
            for i in range(kids):
                child = f"{v}.{i}"
                g.add_edge(v, child)
                nxt.append(child)
        frontier = nxt
    return g


def nx_histogram(g: nx.Graph) -> dict[int, int]:
    hist: dict[int, int] = {}
    lengths = dict(nx.all_pairs_shortest_path_length(g))
    for u, v in itertools.combinations(g.nodes, 2):
        d = lengths[u][v]
        hist[d] = hist.get(d, 0) + 1
    return dict(sorted(hist.items()))


@pytest.fixture
def t13():
    return DendrimerParams(1, 3)


@pytest.fixture
def t23():
    return DendrimerParams(2, 3)


_ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE[number] = ("PASS" if rep.passed else "FAIL", title, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, duration = _ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number:>2}: {title} ({duration:.2f}s)")
