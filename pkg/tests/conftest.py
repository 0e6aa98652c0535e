import itertools

import numpy as np
import pytest

from saddles.graph import Graph, generate_power_law


def complete_graph(n):
    return Graph.from_edges(list(itertools.combinations(range(n), 2)))


def star_graph(leaves):
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)])


def gnp_graph(n, p, seed):
    """Erdos-Renyi graph with isolated vertices dropped; None if edgeless."""
    rng = np.random.default_rng(seed)
    iu = np.triu_indices(n, 1)
    keep = rng.random(len(iu[0])) < p
    if not keep.any():
        return None
    return Graph.from_edges(np.column_stack([iu[0][keep], iu[1][keep]]))


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def star3():
    return star_graph(3)


@pytest.fixture
def single_edge():
    return Graph.from_edges([(0, 1)])


def small_fixtures():
    """Named small graphs used by exhaustive checks."""
    out = {
        "single_edge": Graph.from_edges([(0, 1)]),
        "path4": Graph.from_edges([(0, 1), (1, 2), (2, 3)]),
        "triangle": complete_graph(3),
        "k5": complete_graph(5),
        "star3": star_graph(3),
        "star9": star_graph(9),
        "two_stars": Graph.from_edges([(0, i) for i in range(1, 6)] + [(10, i) for i in range(11, 14)] + [(0, 10)]),
        "powerlaw_500": generate_power_law(500, 2.3, seed=11),
        "powerlaw_1000": generate_power_law(1000, 2.1, seed=12),
    }
    for s in range(5):
        g = gnp_graph(60, 0.08, seed=100 + s)
        if g is not None:
            out[f"gnp_{s}"] = g
    return out


@pytest.fixture(scope="session")
def powerlaw_graph():
    """The desk-scale synthetic graph: n=10^5, gamma=2.1, seed 1."""
    return generate_power_law(100_000, 2.1, seed=1)


ACCEPTANCE_RESULTS = []


def record_criterion(number, passed, detail):
    """Register one acceptance-criterion outcome for the terminal summary."""
    status = {True: "PASS", False: "FAIL", None: "SKIP"}[passed]
    ACCEPTANCE_RESULTS.append((number, status, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[{status}] criterion {number}: {detail}")
