from __future__ import annotations

from collections import Counter

import networkx as nx
import pytest

from localham.corpus import (CONNECTED_BIPARTITE_COUNTS, CONNECTED_COUNTS, enumerate_balanced_bipartite,
                             enumerate_connected, enumerate_connected_bipartite, enumerate_connected_upto,
                             load_graph6_file)
from localham.graph import GraphInputError, bipartition, encode_graph6, is_connected

from conftest import to_nx


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    gs = list(enumerate_connected(n))
    assert len(gs) == CONNECTED_COUNTS[n - 1]
    assert all(g.n == n and is_connected(g) for g in gs)


def test_small_counts_explicit():
    assert len(list(enumerate_connected(1))) == 1
    assert len(list(enumerate_connected(3))) == 2
    assert len(list(enumerate_connected(4))) == 6


def test_n7_matches_graph_atlas():
    ours = Counter(nx.weisfeiler_lehman_graph_hash(to_nx(g), iterations=4) for g in enumerate_connected(7))
    atlas = Counter(nx.weisfeiler_lehman_graph_hash(h, iterations=4) for h in nx.graph_atlas_g()
                    if h.number_of_nodes() == 7 and nx.is_connected(h))
    assert ours == atlas


def test_n6_pairwise_non_isomorphic():
    gs = [to_nx(g) for g in enumerate_connected(6)]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not nx.is_isomorphic(gs[i], gs[j])


def test_upto_is_concatenation():
    a = [encode_graph6(g) for g in enumerate_connected_upto(6, n_min=3)]
    b = [encode_graph6(g) for n in range(3, 7) for g in enumerate_connected(n)]
    assert a == b


@pytest.mark.parametrize("n", range(1, 10))
def test_bipartite_counts(n):
    gs = list(enumerate_connected_bipartite(n))
    assert len(gs) == CONNECTED_BIPARTITE_COUNTS[n - 1]
    assert all(bipartition(g) is not None and is_connected(g) for g in gs)


def test_balanced_bipartite():
    assert [len(list(enumerate_balanced_bipartite(n))) for n in (2, 4, 6, 8)] == [1, 2, 10, 93]
    assert list(enumerate_balanced_bipartite(5)) == []
    assert all(bipartition(g).balanced for g in enumerate_balanced_bipartite(8))


def test_range_errors():
    with pytest.raises(GraphInputError):
        list(enumerate_connected(11))
    with pytest.raises(GraphInputError):
        list(enumerate_connected(0))


def test_load_graph6_file(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("A_\nBw\n")
    assert [g.n for g in load_graph6_file(str(p))] == [2, 3]
