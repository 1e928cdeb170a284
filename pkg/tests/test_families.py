from __future__ import annotations

import pytest

from localham.conditions import FAIL, check_condition
from localham.families import (LayeredSpec, ce_tight_H, g_pn, gn_dirac, layer_of, layered_graph, mm_diam6,
                               named_family)
from localham.graph import GraphInputError, bipartition, complete_graph, popcount
from localham.metrics import ball_mask, diameter, independence_number, vertex_connectivity
from localham.oracles import is_hamiltonian


def test_layered_spec_examples():
    g = layered_graph(LayeredSpec((2, 6, 3, 3, 6, 2)))
    assert g.n == 22 and all(2 * g.degree(u) == popcount(ball_mask(g.rows, u, 3)) for u in range(g.n))
    assert layered_graph(LayeredSpec((1, 1, 1), wrap=True)) == complete_graph(3)
    assert layer_of(LayeredSpec((2, 1))) == [0, 0, 1]


@pytest.mark.parametrize("bad", [(), (0, 2), (2, -1)])
def test_layered_spec_rejects_bad_sizes(bad):
    with pytest.raises(GraphInputError):
        layered_graph(LayeredSpec(bad))


def test_ce_tight_H_statistics():
    for n in (3, 4):
        H = ce_tight_H(n)
        assert H.n == 2 * n * n - 1
        assert vertex_connectivity(H) == independence_number(H) == n
        assert diameter(H) == 2 * n - 1


@pytest.mark.parametrize("p,n", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_g_pn_statistics(p, n):
    g = g_pn(p, n)
    assert g.n == 2 * p * n and set(g.degrees()) == {3 * p - 1}
    assert diameter(g) == n
    assert check_condition(g, "ore").verdict == FAIL
    for cid in ("ore_ball1_lifted", "local_ore_M2", "local_ore_L0", "local_ore_regular", "sphere2_below_degree"):
        assert check_condition(g, cid).passed, cid


def test_gn_dirac():
    for n in (2, 3):
        g = gn_dirac(n)
        assert g.n == 10 * n + 2
        assert check_condition(g, "local_dirac_M3").passed
        assert check_condition(g, "dirac").verdict == FAIL
    assert is_hamiltonian(gn_dirac(2), "backtrack").yes


def test_mm_diam6():
    g = mm_diam6(5)
    assert g.n == 25 and diameter(g) == 6 and bipartition(g) is not None
    assert check_condition(g, "local_mm", scope=False).passed
    assert not bipartition(g).balanced
    assert bipartition(mm_diam6(4)).balanced


def test_named_family_errors():
    assert named_family("g_pn", 2, 3) == g_pn(2, 3)
    with pytest.raises(GraphInputError):
        named_family("nope", 1)
    with pytest.raises(GraphInputError):
        named_family("g_pn", 2)
    with pytest.raises(GraphInputError):
        g_pn(1, 3)
