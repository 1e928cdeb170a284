"""Isomorph-free enumeration of small connected graphs.

Canonical augmentation by vertex addition: a child ``P + w`` of a parent
``P`` is kept iff ``w`` is equivalent, under the child's automorphism group,
to the child's canonical deletion vertex. The deletion vertex is chosen among
non-cut vertices (so parents stay connected) with the largest cheap
invariant, ties broken by the largest nauty canonical position. Subsets of
the parent are first reduced to orbits under the parent's automorphisms.

nauty (through ``pynauty``) supplies automorphism groups and canonical
labellings; nothing else is delegated.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import pynauty

from .graph import Graph, GraphInputError, component_mask, iter_bits, popcount, read_graph6_lines, two_coloring

MAX_CONNECTED_N = 10
MAX_BIPARTITE_N = 12

# https://oeis.org/A001349 and https://oeis.org/A005142 (n = 1..)
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571)
CONNECTED_BIPARTITE_COUNTS = (1, 1, 1, 3, 5, 17, 44, 182, 730, 4032, 25598, 212780)


def _nauty(rows) -> pynauty.Graph:
    n = len(rows)
    return pynauty.Graph(n, adjacency_dict={v: list(iter_bits(rows[v])) for v in range(n)})


def _permute(mask: int, perm) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << perm[v]
    return out


def _subset_orbit_reps(rows, candidates: Iterable[int]) -> list[int]:
    """One representative (the smallest mask) per orbit of ``candidates`` under Aut."""
    cands = list(candidates)
    gens = pynauty.autgrp(_nauty(rows))[0] if len(rows) > 1 else []
    if not gens:
        return cands
    parent = {m: m for m in cands}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in cands:
        for perm in gens:
            a, b = find(m), find(_permute(m, perm))
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return sorted({find(m) for m in cands})


def _non_cut_mask(rows, full: int) -> int:
    out = 0
    for v in iter_bits(full):
        rest = full & ~(1 << v)
        s = (rest & -rest).bit_length() - 1
        if component_mask(rows, s, rest) == rest:
            out |= 1 << v
    return out


def _invariant(rows, v: int):
    return (popcount(rows[v]), tuple(sorted(popcount(rows[w]) for w in iter_bits(rows[v]))))


def _accept(rows: list[int], w: int) -> bool:
    """Is ``w`` the canonical deletion vertex of the graph (up to automorphism)?"""
    n = len(rows)
    full = (1 << n) - 1
    cand = _non_cut_mask(rows, full)
    if not cand >> w & 1:
        return False
    inv = {v: _invariant(rows, v) for v in iter_bits(cand)}
    best = max(inv.values())
    if inv[w] != best:
        return False
    top = [v for v in inv if inv[v] == best]
    if len(top) == 1:
        return True
    ng = _nauty(rows)
    lab = pynauty.canon_label(ng)
    pos = {v: i for i, v in enumerate(lab)}
    chosen = max(top, key=lambda v: pos[v])
    if chosen == w:
        return True
    orbits = pynauty.autgrp(ng)[3]
    return orbits[chosen] == orbits[w]


def _children(rows: tuple[int, ...], subsets: Iterable[int]) -> Iterator[tuple[int, ...]]:
    n = len(rows)
    for S in subsets:
        child = list(rows) + [S]
        for v in iter_bits(S):
            child[v] |= 1 << n
        if _accept(child, n):
            yield tuple(child)


def _grow(level: list[tuple[int, ...]], subsets_of) -> list[tuple[int, ...]]:
    out = []
    for rows in level:
        out.extend(_children(rows, _subset_orbit_reps(rows, subsets_of(rows))))
    return out


def _all_nonempty(rows):
    return range(1, 1 << len(rows))


def _one_class(rows):
    color = two_coloring(rows)
    a = sum(1 << v for v, c in enumerate(color) if c == 0)
    b = sum(1 << v for v, c in enumerate(color) if c == 1)
    out = []
    for part in (a, b):
        sub = part
        while sub:
            out.append(sub)
            sub = (sub - 1) & part
    return sorted(out)


def _levels(n: int, subsets_of) -> Iterator[list[tuple[int, ...]]]:
    level = [(0,)]
    yield level
    for _ in range(2, n + 1):
        level = _grow(level, subsets_of)
        yield level


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on ``n`` vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_CONNECTED_N:
        raise GraphInputError(f"built-in enumerator supports 1 <= n <= {MAX_CONNECTED_N}; "
                              "use an external graph6 corpus beyond that")
    if n == 1:
        yield Graph(1, (0,))
        return
    *_, prev = _levels(n - 1, _all_nonempty)
    for rows in prev:
        for child in _children(rows, _subset_orbit_reps(rows, _all_nonempty(rows))):
            yield Graph(n, child)


def enumerate_connected_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    """Connected graphs for ``n_min <= n <= n_max``, by increasing ``n``.

    The last level is streamed, earlier ones are held in memory as parents.
    """
    if not 1 <= n_max <= MAX_CONNECTED_N:
        raise GraphInputError(f"built-in enumerator supports n <= {MAX_CONNECTED_N}")
    if n_max == 1:
        if n_min <= 1:
            yield Graph(1, (0,))
        return
    level: list[tuple[int, ...]] = []
    for k, level in enumerate(_levels(n_max - 1, _all_nonempty), start=1):
        if k >= n_min:
            for rows in level:
                yield Graph(k, rows)
    for rows in level:
        for child in _children(rows, _subset_orbit_reps(rows, _all_nonempty(rows))):
            yield Graph(n_max, child)


def enumerate_connected_bipartite(n: int) -> Iterator[Graph]:
    """All connected bipartite graphs on ``n`` vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_BIPARTITE_N:
        raise GraphInputError(f"bipartite enumerator supports 1 <= n <= {MAX_BIPARTITE_N}")
    *_, last = _levels(n, _one_class)
    for rows in last:
        yield Graph(n, rows)


def enumerate_balanced_bipartite(n: int) -> Iterator[Graph]:
    """Connected balanced bipartite graphs on ``n`` vertices (empty for odd ``n``)."""
    if n % 2:
        return
    for g in enumerate_connected_bipartite(n):
        color = two_coloring(g.rows)
        if 2 * sum(color) == n:
            yield g


def load_graph6_file(path: str) -> Iterator[Graph]:
    with open(path) as fh:
        yield from read_graph6_lines(fh)
