from __future__ import annotations

import pytest
from hypothesis import given

from localham.graph import (Graph6Error, GraphInputError, bipartition, complete_bipartite, complete_graph,
                            components, cycle_graph, encode_graph6, format_edge_list, from_edge_list, from_rows,
                            induced_subgraph, is_connected, parse_edge_list_text, parse_graph6, path_graph,
                            petersen_graph, read_graph6_lines, star_graph, wheel_graph)

from conftest import graphs, to_nx


def test_triangle_from_edges():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.degrees() == [2, 2, 2] and g.m == 3


def test_duplicate_edges_collapse():
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphInputError):
        from_edge_list(4, edges)


def test_from_rows_rejects_asymmetric():
    with pytest.raises(GraphInputError):
        from_rows([0b10, 0b00])


@pytest.mark.parametrize("text,n,m", [("@", 1, 0), ("A_", 2, 1), ("A?", 2, 0)])
def test_parse_small_graph6(text, n, m):
    g = parse_graph6(text)
    assert (g.n, g.m) == (n, m)


def test_encode_small_graph6():
    assert encode_graph6(complete_graph(2)) == "A_"
    assert encode_graph6(complete_graph(1)) == "@"
    c5 = encode_graph6(cycle_graph(5))
    assert len(c5) == 3 and parse_graph6(c5) == cycle_graph(5)


@pytest.mark.parametrize("bad", ["", "A", "A~", "B!", "Bx"])
def test_malformed_graph6(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_matches_networkx_encoder():
    import networkx as nx
    for g in (petersen_graph(), wheel_graph(6), complete_bipartite(3, 4), path_graph(7)):
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == ref


def test_large_graph6_size_prefix():
    g = cycle_graph(70)
    text = encode_graph6(g)
    assert text[0] == "~" and parse_graph6(text) == g


@given(graphs(max_n=14))
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@given(graphs(max_n=10))
def test_rows_symmetric_and_loop_free(g):
    for v in range(g.n):
        assert not g.rows[v] >> v & 1
        for w in g.neighbors(v):
            assert g.has_edge(w, v)


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert parse_edge_list_text(format_edge_list(g)) == g


def test_read_graph6_lines_skips_header_and_blanks():
    gs = list(read_graph6_lines([">>graph6<<A_\n", "\n", "Bw\n"]))
    assert [g.n for g in gs] == [2, 3]


def test_induced_subgraph_examples():
    k3, mapping = induced_subgraph(complete_graph(4), {0, 1, 2})
    assert k3 == complete_graph(3) and mapping == (0, 1, 2)
    p4, _ = induced_subgraph(cycle_graph(9), {0, 1, 2, 3})
    assert p4 == path_graph(4)
    g = petersen_graph()
    same, mapping = induced_subgraph(g, range(g.n))
    assert same == g and mapping == tuple(range(g.n))
    with pytest.raises(GraphInputError):
        induced_subgraph(g, {0, 12})


@given(graphs(max_n=10), graphs(max_n=10))
def test_induced_subgraph_preserves_adjacency(g, h):
    S = [v for v in range(g.n) if v < h.n and h.rows[v] & 1] or [0]
    sub, mapping = induced_subgraph(g, S)
    for i in range(sub.n):
        for j in range(sub.n):
            if i != j:
                assert sub.has_edge(i, j) == g.has_edge(mapping[i], mapping[j])


def test_connectivity_examples():
    assert is_connected(cycle_graph(9))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(complete_graph(1))
    assert components(from_edge_list(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]


def test_bipartition_examples():
    bp = bipartition(cycle_graph(6))
    assert bp is not None and bp.balanced and sorted(map(len, bp.parts)) == [3, 3]
    assert bipartition(cycle_graph(5)) is None
    bp = bipartition(complete_bipartite(3, 3))
    assert bp.balanced


def test_named_constructors():
    assert petersen_graph().is_regular() and petersen_graph().degrees() == [3] * 10
    assert star_graph(4).degree(0) == 4
    assert wheel_graph(5).n == 6 and wheel_graph(5).degree(0) == 5
