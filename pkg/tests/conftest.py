from __future__ import annotations

import random

import pytest
from hypothesis import settings, strategies as st

from localham.graph import Graph, from_edge_list

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, bits) if keep]
    if connected:
        # a random spanning tree keeps the draw connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.append((order[i], order[j]))
    return from_edge_list(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def to_nx(g: Graph):
    import networkx as nx
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import acceptance_log
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
