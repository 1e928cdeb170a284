from __future__ import annotations

import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given

from localham.graph import (complete_bipartite, complete_graph, cycle_graph, from_edge_list, path_graph,
                            petersen_graph, star_graph)
from localham.oracles import (LIMIT, NO, YES, Budget, SubsetTables, all_longest_cycles_dominating, canonical_cycle,
                              cycle_through, is_dominating, is_hamiltonian, is_valid_cycle, is_valid_path,
                              longest_cycle, longest_path, longest_path_length)

from conftest import graphs, random_graph, to_nx

ENGINES = ("dp", "backtrack")


def _brute_ham(g):
    if g.n < 3:
        return False
    for perm in permutations(range(1, g.n)):
        cyc = (0,) + perm
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


@pytest.mark.parametrize("engine", ENGINES)
def test_hamiltonian_examples(engine):
    assert is_hamiltonian(cycle_graph(9), engine).answer == YES
    assert is_hamiltonian(petersen_graph(), engine).answer == NO
    v = is_hamiltonian(complete_bipartite(3, 3), engine)
    cyc = v.certificate.vertices
    assert v.yes and all((cyc[i] < 3) != (cyc[i + 1] < 3) for i in range(5))


@pytest.mark.parametrize("engine", ENGINES)
def test_longest_cycle_examples(engine):
    assert longest_cycle(petersen_graph(), engine)[0] == 9
    assert longest_cycle(path_graph(5), engine) is None
    assert longest_cycle(complete_graph(4), engine)[0] == 4


@pytest.mark.parametrize("engine", ENGINES)
def test_dominating_examples(engine):
    assert all_longest_cycles_dominating(petersen_graph(), engine).answer == YES
    g = from_edge_list(11, [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10)])
    v = all_longest_cycles_dominating(g, engine)
    assert v.answer == NO and is_dominating(g, v.certificate.vertices) is not None
    assert all_longest_cycles_dominating(complete_graph(4), engine).answer == YES


@pytest.mark.parametrize("engine", ENGINES)
def test_longest_path_examples(engine):
    assert longest_path_length(path_graph(5), engine) == 5
    assert longest_path_length(cycle_graph(6), engine) == 6
    p = longest_path(petersen_graph(), engine)
    assert len(p) == 10 and is_valid_path(petersen_graph(), p)


@pytest.mark.parametrize("engine", ENGINES)
def test_cycle_through_examples(engine):
    assert cycle_through(cycle_graph(9), [2, 7], engine).certificate.length == 9
    k4e = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    v = cycle_through(k4e, [2, 3], engine)
    assert v.yes and v.certificate.length == 4
    assert cycle_through(star_graph(4), [0], engine).answer == NO


def test_budget_gives_resource_limit():
    v = is_hamiltonian(petersen_graph(), "backtrack", Budget(max_nodes=5))
    assert v.answer == LIMIT and v.answer != NO


def test_canonical_cycle():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((2, 0, 3, 1)) == (0, 2, 1, 3)


@given(graphs(max_n=8))
def test_hamiltonicity_matches_brute_force(g):
    for engine in ENGINES:
        v = is_hamiltonian(g, engine)
        assert v.yes == _brute_ham(g)
        if v.yes:
            assert is_valid_cycle(g, v.certificate.vertices) and v.certificate.length == g.n


@given(graphs(min_n=3, max_n=10))
def test_oracle_laws_and_engine_agreement(g):
    tables = SubsetTables(g)
    ham_dp = is_hamiltonian(g, "dp", tables=tables)
    ham_bt = is_hamiltonian(g, "backtrack")
    assert ham_dp.answer == ham_bt.answer
    lc_dp = longest_cycle(g, "dp", tables=tables)
    lc_bt = longest_cycle(g, "backtrack")
    assert (lc_dp and lc_dp[0]) == (lc_bt and lc_bt[0])
    for lc in (lc_dp, lc_bt):
        if lc:
            assert is_valid_cycle(g, lc[1].vertices) and lc[1].length == lc[0]
    assert ham_dp.yes == (lc_dp is not None and lc_dp[0] == g.n)
    assert cycle_through(g, range(g.n), "dp", tables=tables).yes == ham_dp.yes
    assert cycle_through(g, range(g.n), "backtrack").yes == ham_dp.yes
    assert (all_longest_cycles_dominating(g, "dp", tables=tables).answer
            == all_longest_cycles_dominating(g, "backtrack").answer)
    assert longest_path_length(g, "dp", tables=tables) == longest_path_length(g, "backtrack")


def test_engines_agree_on_random_graphs_up_to_ten():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(3, 10), rng.random())
        S = rng.sample(range(g.n), rng.randint(1, min(4, g.n)))
        a, b = cycle_through(g, S, "dp"), cycle_through(g, S, "backtrack")
        assert a.answer == b.answer
        for v in (a, b):
            if v.yes:
                assert set(S) <= set(v.certificate.vertices) and is_valid_cycle(g, v.certificate.vertices)


def test_against_networkx_cycle_basis_lengths():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 8), 0.5)
        h = to_nx(g)
        cyc = [c for c in nx.simple_cycles(h) if len(c) >= 3]
        best = max(map(len, cyc), default=None)
        lc = longest_cycle(g)
        assert (lc and lc[0]) == best
