from __future__ import annotations

from itertools import combinations

import pytest

from localham.conditions import check_condition
from localham.constructive import (LOCALITY_RADIUS, ContractError, OrientedCycle, OrientedPath, absorb_vertex,
                                   extend_cycle_locally, grow_to_hamiltonian, locality_violation, mm_close_to_cycle,
                                   mm_rotate, predecessor_set, successor_set)
from localham.corpus import enumerate_balanced_bipartite, enumerate_connected
from localham.families import g_pn, mm_diam6
from localham.graph import complete_bipartite, complete_graph, cycle_graph, path_graph, wheel_graph
from localham.oracles import is_valid_cycle, longest_cycle, longest_path, longest_path_length


def test_successor_sets():
    C = OrientedCycle((0, 1, 2, 3))
    assert successor_set(C, {0, 2}) == {1, 3}
    assert successor_set(C, set()) == set()
    assert successor_set(C, C.vertex_set) == set(C.vertices)
    assert predecessor_set(C, {1}) == {0}
    assert C.segment(3, 1) == (3, 0, 1)


def test_bad_cycles_rejected():
    with pytest.raises(ContractError):
        OrientedCycle((0, 1))
    with pytest.raises(ContractError):
        extend_cycle_locally(path_graph(4), OrientedCycle((0, 1, 2)), 3)


def test_extend_in_complete_graph():
    g = complete_graph(5)
    C = OrientedCycle((0, 1, 2))
    new = extend_cycle_locally(g, C, 3)
    assert len(new) > 3 and is_valid_cycle(g, new.vertices)
    assert set(new.vertices) & set(g.neighbors(3))
    assert locality_violation(g, C, new, 3) is None


def test_extend_rejects_when_all_neighbours_on_cycle():
    g = wheel_graph(5)
    with pytest.raises(ContractError):
        extend_cycle_locally(g, OrientedCycle((1, 2, 3, 4, 5)), 0)


def test_absorb_hub_of_wheel():
    g = wheel_graph(5)
    new = absorb_vertex(g, OrientedCycle((1, 2, 3, 4, 5)), 0)
    assert len(new) == 6 and is_valid_cycle(g, new.vertices)


def test_absorb_rejects_vertex_with_off_cycle_neighbour():
    g = complete_graph(5)
    with pytest.raises(ContractError):
        absorb_vertex(g, OrientedCycle((0, 1, 2)), 3)


def test_absorb_last_vertex_of_g28():
    g = g_pn(2, 4)
    ham = longest_cycle(g)[1].vertices
    assert len(ham) == g.n
    for i, v in enumerate(ham):
        rest = ham[:i] + ham[i + 1:]
        if is_valid_cycle(g, rest):
            break
    new = absorb_vertex(g, OrientedCycle(rest), v)
    assert len(new) == g.n and is_valid_cycle(g, new.vertices)


def test_extend_g28_and_grow():
    g = g_pn(2, 4)
    C, steps = grow_to_hamiltonian(g, (0, 1, 2))
    assert len(C) == g.n and is_valid_cycle(g, C.vertices)
    for s in steps:
        assert locality_violation(g, OrientedCycle(s.before), OrientedCycle(s.after), s.vertex) is None


def test_grow_on_all_local_kappa_graphs_n7():
    runs = 0
    for g in enumerate_connected(7):
        if not check_condition(g, "local_kappa").passed:
            continue
        for a, b, c in combinations(range(g.n), 3):
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
                C, _ = grow_to_hamiltonian(g, (a, b, c))
                assert len(C) == g.n
                runs += 1
    assert runs > 1000


def test_locality_violation_detects_far_changes():
    g = cycle_graph(40)
    old = OrientedCycle((0, 1, 2))
    new = OrientedCycle((20, 21, 22))
    assert locality_violation(g, old, new, 0, radius=3) is not None
    assert LOCALITY_RADIUS == 12


def test_rotation_examples():
    g = cycle_graph(6)
    P = OrientedPath((0, 1, 2, 3, 4, 5))
    assert P.f(g) == 6
    with pytest.raises(ContractError):
        mm_rotate(g, P)
    cert, steps = mm_close_to_cycle(g, P)
    assert cert.length == 6 and steps == 0
    k33 = complete_bipartite(3, 3)
    for P in (OrientedPath((0, 3, 1, 4, 2, 5)), OrientedPath((5, 2, 4, 1, 3, 0))):
        cert, _ = mm_close_to_cycle(k33, P)
        assert cert.length == 6
    with pytest.raises(ContractError):
        OrientedPath((0, 1, 2)).f(path_graph(3))


def test_rotation_increases_f_and_keeps_vertices():
    for n in (6, 8):
        for g in enumerate_balanced_bipartite(n):
            if not check_condition(g, "local_mm").passed:
                continue
            L = longest_path_length(g)
            P = OrientedPath(tuple(longest_path(g)))
            assert len(P) == L
            t2 = 2 * (L // 2)
            while P.f(g) < t2:
                Q = mm_rotate(g, P)
                assert set(Q.vertices) == set(P.vertices) and Q.f(g) > P.f(g)
                P = Q


def test_mm_diam6_longest_path_closes():
    # n = 4 is the balanced member of the family (parts 2n+2 and 3n-2)
    g = mm_diam6(4)
    assert check_condition(g, "local_mm").passed
    P = OrientedPath(tuple(longest_path(g)))
    cert, _ = mm_close_to_cycle(g, P)
    assert is_valid_cycle(g, cert.vertices) and cert.length >= len(P) - 1
    with pytest.raises(ContractError):
        mm_close_to_cycle(mm_diam6(5), OrientedPath(tuple(longest_path(mm_diam6(5)))))
