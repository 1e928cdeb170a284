"""Exact deciders for Hamiltonicity, longest cycles/paths and cycles through sets.

Two engines:

* ``"dp"``: subset dynamic programming over vertex masks. One table answers
  every question about a small graph at once (which vertex sets carry a
  spanning cycle, which carry a spanning path).
* ``"backtrack"``: depth-first search with connectivity and degree pruning,
  used above :data:`DP_MAX_N` vertices and as a cross-check below it.

``"auto"`` picks DP up to :data:`DP_MAX_N` vertices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, component_mask, iter_bits, mask_of, popcount, two_coloring
from .metrics import biconnected_blocks

DP_MAX_N = 16

YES, NO, LIMIT = "yes", "no", "resource-limit"


class ResourceLimitExceeded(RuntimeError):
    """A search exhausted its node or wall-clock budget."""


class Budget:
    """Node/time budget shared by one search. ``None`` limits are unbounded."""

    def __init__(self, max_nodes: int | None = None, max_seconds: float | None = None):
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.nodes = 0
        self._deadline = None if max_seconds is None else time.monotonic() + max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise ResourceLimitExceeded(f"node budget {self.max_nodes} exhausted")
        if self._deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self._deadline:
            raise ResourceLimitExceeded(f"time budget {self.max_seconds}s exhausted")


def _budget(b: Budget | None) -> Budget:
    return b if b is not None else Budget()


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def canonical(self) -> "CycleCertificate":
        return CycleCertificate(canonical_cycle(self.vertices))

    def edges(self) -> set[frozenset[int]]:
        vs = self.vertices
        return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}


@dataclass
class OracleVerdict:
    answer: str
    certificate: CycleCertificate | None = None
    nodes: int = 0
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def yes(self) -> bool:
        return self.answer == YES


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex, oriented toward the smaller neighbour."""
    if not seq:
        return ()
    k = len(seq)
    i = min(range(k), key=lambda j: seq[j])
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    back = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, back)


def is_valid_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))


def is_valid_path(g: Graph, seq: Sequence[int]) -> bool:
    if not seq or len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def is_dominating(g: Graph, cycle_vertices: Iterable[int]) -> tuple[int, int] | None:
    """``None`` if the complement of the cycle is independent, else an edge there."""
    off = g.all_mask & ~mask_of(cycle_vertices)
    for v in iter_bits(off):
        w = g.rows[v] & off
        if w:
            return (v, (w & -w).bit_length() - 1)
    return None


# -- subset DP ----------------------------------------------------------------


class SubsetTables:
    """Spanning-cycle and spanning-path tables over all vertex subsets."""

    def __init__(self, g: Graph):
        if g.n > 22:
            raise ValueError("subset tables are limited to small graphs")
        self.g = g
        self._cycle_ends: list[int] | None = None
        self._path_ends: list[int] | None = None

    @property
    def cycle_ends(self) -> list[int]:
        """``ends[S]``: endpoints of spanning paths of ``G[S]`` starting at ``min(S)``."""
        if self._cycle_ends is None:
            rows = self.g.rows
            n = self.g.n
            ends = [0] * (1 << n)
            for s in range(n):
                ends[1 << s] = 1 << s
            for mask in range(1, 1 << n):
                e = ends[mask]
                if not e:
                    continue
                low = mask & -mask
                allowed = ~mask & ~((low << 1) - 1)
                for v in iter_bits(e):
                    for w in iter_bits(rows[v] & allowed):
                        ends[mask | (1 << w)] |= 1 << w
            self._cycle_ends = ends
        return self._cycle_ends

    @property
    def path_ends(self) -> list[int]:
        """``ends[S]``: endpoints of spanning paths of ``G[S]`` (any start)."""
        if self._path_ends is None:
            rows = self.g.rows
            n = self.g.n
            ends = [0] * (1 << n)
            for s in range(n):
                ends[1 << s] = 1 << s
            for mask in range(1, 1 << n):
                e = ends[mask]
                if not e:
                    continue
                for v in iter_bits(e):
                    for w in iter_bits(rows[v] & ~mask):
                        ends[mask | (1 << w)] |= 1 << w
            self._path_ends = ends
        return self._path_ends

    def has_cycle_on(self, mask: int) -> bool:
        if popcount(mask) < 3:
            return False
        low = (mask & -mask).bit_length() - 1
        return bool(self.cycle_ends[mask] & self.g.rows[low])

    def cycle_masks(self) -> list[int]:
        rows = self.g.rows
        ends = self.cycle_ends
        out = []
        for mask in range(1, 1 << self.g.n):
            e = ends[mask]
            if e and e & rows[(mask & -mask).bit_length() - 1] and popcount(mask) >= 3:
                out.append(mask)
        return out

    def longest_cycle_mask(self) -> int:
        best, best_mask = 0, 0
        for mask in self.cycle_masks():
            c = popcount(mask)
            if c > best:
                best, best_mask = c, mask
        return best_mask

    def longest_path_size(self) -> int:
        ends = self.path_ends
        return max((popcount(m) for m in range(1, 1 << self.g.n) if ends[m]), default=0)


def _mask_cycle(g: Graph, mask: int, budget: Budget | None = None) -> tuple[int, ...]:
    cyc = hamilton_cycle_on(g.rows, mask, budget=budget)
    assert cyc is not None
    return cyc


# -- backtracking ---------------------------------------------------------------


def hamilton_cycle_on(rows: Sequence[int], mask: int, forced: Iterable[tuple[int, int]] = (),
                      budget: Budget | None = None, order: str = "lex") -> tuple[int, ...] | None:
    """A spanning cycle of the subgraph induced on ``mask`` using every ``forced`` edge.

    With ``order="lex"`` the result is the lexicographically smallest
    canonical cycle; ``order="warnsdorff"`` tries low-degree continuations
    first and is usually faster on large graphs.
    """
    budget = _budget(budget)
    k = popcount(mask)
    if k < 3:
        return None
    forced_adj: dict[int, int] = {}
    for a, b in forced:
        if not (mask >> a & 1 and mask >> b & 1 and rows[a] >> b & 1):
            return None
        forced_adj[a] = forced_adj.get(a, 0) | (1 << b)
        forced_adj[b] = forced_adj.get(b, 0) | (1 << a)
        if popcount(forced_adj[a]) > 2 or popcount(forced_adj[b]) > 2:
            return None
    for v in iter_bits(mask):
        if popcount(rows[v] & mask) < 2:
            return None
    if component_mask(rows, (mask & -mask).bit_length() - 1, mask) != mask:
        return None
    s = (mask & -mask).bit_length() - 1
    fs = forced_adj.get(s, 0)
    path = [s]

    def dfs(x: int, visited: int) -> bool:
        budget.tick()
        remaining = mask & ~visited
        prev = path[-2] if len(path) >= 2 else -1
        # forced edges at x not yet realised by the edge from prev
        need = forced_adj.get(x, 0) & ~(1 << prev) if prev >= 0 else 0
        if not remaining:
            if not rows[x] >> s & 1 or need & ~(1 << s):
                return False
            return not fs & ~(1 << path[1]) & ~(1 << x)
        if need:
            if popcount(need) > 1 or not need & remaining:
                return False
        # pruning: every remaining vertex needs two usable neighbours
        pool = remaining | (1 << x) | (1 << s)
        m = remaining
        while m:
            low = m & -m
            if (rows[low.bit_length() - 1] & pool).bit_count() < 2:
                return False
            m ^= low
        region = remaining | (1 << x)
        seen = front = 1 << x
        while front:
            nxt = 0
            while front:
                low = front & -front
                nxt |= rows[low.bit_length() - 1]
                front ^= low
            front = nxt & region & ~seen
            seen |= front
        if seen != region:
            return False
        if not rows[s] & remaining:
            return False
        cand = rows[x] & remaining
        if need:
            cand &= need
        nxts = list(iter_bits(cand))
        if order == "warnsdorff":
            nxts.sort(key=lambda w: popcount(rows[w] & remaining))
        for y in nxts:
            if x == s and popcount(fs & ~(1 << y)) > 1:
                continue
            path.append(y)
            if dfs(y, visited | (1 << y)):
                return True
            path.pop()
        return False

    if dfs(s, 1 << s):
        cyc = tuple(path)
        if order == "lex":
            return cyc if cyc <= canonical_cycle(cyc) else canonical_cycle(cyc)
        return canonical_cycle(cyc)
    return None


def _backtrack_cycles(rows: Sequence[int], mask: int, budget: Budget, min_len: int,
                      exact: int | None = None):
    """Yield each cycle in ``mask`` once (start at its minimum, second < last)."""
    for s in iter_bits(mask):
        higher = mask & ~((2 << s) - 1)
        path = [s]

        def dfs(x: int, visited: int):
            budget.tick()
            length = len(path)
            if length >= 3 and rows[x] >> s & 1 and path[1] < x:
                if exact is None or length == exact:
                    if length >= min_len:
                        yield tuple(path)
            if exact is not None and length >= exact:
                return
            avail = higher & ~visited
            reach = component_mask(rows, x, avail | (1 << x)) & ~(1 << x)
            if length + popcount(reach) < min_len:
                return
            for y in iter_bits(rows[x] & avail):
                path.append(y)
                yield from dfs(y, visited | (1 << y))
                path.pop()

        yield from dfs(s, 1 << s)


def _bt_longest_cycle(g: Graph, budget: Budget) -> tuple[int, ...] | None:
    cyc = hamilton_cycle_on(g.rows, g.all_mask, budget=budget, order="warnsdorff")
    if cyc is not None:
        return cyc
    best: tuple[int, ...] | None = None
    for block in biconnected_blocks(g.rows, g.all_mask):
        if popcount(block) < 3:
            continue
        # the block's own spanning cycle is the best it can offer
        cyc = hamilton_cycle_on(g.rows, block, budget=budget, order="warnsdorff")
        if cyc is not None:
            if best is None or len(cyc) > len(best):
                best = cyc
            continue
        floor = 3 if best is None else len(best) + 1
        for c in _backtrack_cycles(g.rows, block, budget, floor):
            if best is None or len(c) > len(best):
                best = c
                floor = len(c) + 1
    return best


# -- public oracles -----------------------------------------------------------------


def _engine(g: Graph, engine: str) -> str:
    if engine == "auto":
        return "dp" if g.n <= DP_MAX_N else "backtrack"
    if engine not in ("dp", "backtrack"):
        raise ValueError(f"unknown engine {engine!r}")
    return engine


def _unbalanced_bipartite(rows: Sequence[int]) -> bool:
    color = two_coloring(rows)
    return color is not None and 2 * sum(color) != len(rows)


def is_hamiltonian(g: Graph, engine: str = "auto", budget: Budget | None = None,
                   tables: SubsetTables | None = None) -> OracleVerdict:
    budget = _budget(budget)
    t0 = time.perf_counter()
    if g.n < 3 or component_mask(g.rows, 0, g.all_mask) != g.all_mask:
        return OracleVerdict(NO, elapsed=time.perf_counter() - t0)
    try:
        if _engine(g, engine) == "dp":
            tables = tables or SubsetTables(g)
            cyc = _mask_cycle(g, g.all_mask, budget) if tables.has_cycle_on(g.all_mask) else None
        elif _unbalanced_bipartite(g.rows):
            cyc = None
        else:
            cyc = hamilton_cycle_on(g.rows, g.all_mask, budget=budget, order="warnsdorff")
    except ResourceLimitExceeded as exc:
        return OracleVerdict(LIMIT, nodes=budget.nodes, elapsed=time.perf_counter() - t0,
                             detail={"reason": str(exc)})
    elapsed = time.perf_counter() - t0
    if cyc is None:
        return OracleVerdict(NO, nodes=budget.nodes, elapsed=elapsed)
    return OracleVerdict(YES, CycleCertificate(canonical_cycle(cyc)), budget.nodes, elapsed)


def longest_cycle(g: Graph, engine: str = "auto", budget: Budget | None = None,
                  tables: SubsetTables | None = None) -> tuple[int, CycleCertificate] | None:
    """``(length, witness)`` of a longest cycle, or ``None`` for an acyclic graph."""
    budget = _budget(budget)
    if _engine(g, engine) == "dp":
        tables = tables or SubsetTables(g)
        mask = tables.longest_cycle_mask()
        if not mask:
            return None
        cyc = _mask_cycle(g, mask, budget)
    else:
        cyc = _bt_longest_cycle(g, budget)
        if cyc is None:
            return None
    return len(cyc), CycleCertificate(canonical_cycle(cyc))


def all_longest_cycles_dominating(g: Graph, engine: str = "auto", budget: Budget | None = None,
                                  tables: SubsetTables | None = None) -> OracleVerdict:
    """``yes`` with one longest cycle, or ``no`` with a non-dominating longest cycle.

    Whether a cycle dominates depends only on its vertex set, so the DP
    engine checks every vertex set of maximum size that carries a cycle.
    """
    budget = _budget(budget)
    t0 = time.perf_counter()
    try:
        if _engine(g, engine) == "dp":
            tables = tables or SubsetTables(g)
            masks = tables.cycle_masks()
            if not masks:
                return OracleVerdict(NO, detail={"reason": "acyclic"})
            top = max(popcount(m) for m in masks)
            longest = [m for m in masks if popcount(m) == top]
            for m in longest:
                edge = is_dominating(g, iter_bits(m))
                if edge is not None:
                    cyc = _mask_cycle(g, m, budget)
                    return OracleVerdict(NO, CycleCertificate(canonical_cycle(cyc)), budget.nodes,
                                         time.perf_counter() - t0, {"edge": edge})
            cyc = _mask_cycle(g, longest[0], budget)
        else:
            found = longest_cycle(g, "backtrack", budget)
            if found is None:
                return OracleVerdict(NO, detail={"reason": "acyclic"})
            top, cert = found
            cyc = cert.vertices
            for block in biconnected_blocks(g.rows, g.all_mask):
                if popcount(block) < top:
                    continue
                for c in _backtrack_cycles(g.rows, block, budget, top, exact=top):
                    edge = is_dominating(g, c)
                    if edge is not None:
                        return OracleVerdict(NO, CycleCertificate(canonical_cycle(c)), budget.nodes,
                                             time.perf_counter() - t0, {"edge": edge})
    except ResourceLimitExceeded as exc:
        return OracleVerdict(LIMIT, nodes=budget.nodes, elapsed=time.perf_counter() - t0,
                             detail={"reason": str(exc)})
    return OracleVerdict(YES, CycleCertificate(canonical_cycle(cyc)), budget.nodes,
                         time.perf_counter() - t0)


def longest_path(g: Graph, engine: str = "auto", budget: Budget | None = None,
                 tables: SubsetTables | None = None) -> tuple[int, ...]:
    """One longest path (as a vertex sequence)."""
    budget = _budget(budget)
    if g.n == 0:
        return ()
    if _engine(g, engine) == "dp":
        tables = tables or SubsetTables(g)
        ends = tables.path_ends
        best = max(range(1, 1 << g.n), key=lambda m: (popcount(m) if ends[m] else 0, -m))
        return _path_on(g.rows, best, (ends[best] & -ends[best]).bit_length() - 1, budget)
    rows = g.rows
    n = g.n
    color = two_coloring(rows)
    cap = n
    if color is not None:
        ones = sum(color)
        cap = min(n, 2 * min(ones, n - ones) + (ones != n - ones))
    if cap == n and n >= 3 and g.m >= n and not _unbalanced_bipartite(rows):
        cyc = hamilton_cycle_on(rows, g.all_mask, budget=budget)
        if cyc is not None:
            return tuple(cyc)
    best: list[tuple[int, ...]] = [(0,)]

    def bound(x: int, reach: int) -> int:
        rest = reach & ~(1 << x)
        total = popcount(rest)
        # vertices with at most one neighbour left can only end the path
        dead = sum(1 for v in iter_bits(rest) if popcount(rows[v] & reach) <= 1)
        total -= max(0, dead - 1)
        if color is not None:
            same = sum(1 for v in iter_bits(rest) if color[v] == color[x])
            other = popcount(rest) - same
            total = min(total, 2 * same + 1 if other > same else 2 * other)
        return total

    def dfs(path: list[int], visited: int) -> bool:
        budget.tick()
        if len(path) > len(best[0]):
            best[0] = tuple(path)
            if len(path) >= cap:
                return True
        x = path[-1]
        reach = component_mask(rows, x, (g.all_mask & ~visited) | (1 << x))
        if len(path) + bound(x, reach) <= len(best[0]):
            return False
        for y in iter_bits(rows[x] & ~visited):
            path.append(y)
            if dfs(path, visited | (1 << y)):
                return True
            path.pop()
        return False

    starts = list(range(n))
    if color is not None and 2 * sum(color) != n:
        # a path of maximum size starts in the larger colour class
        big = int(2 * sum(color) > n)
        starts.sort(key=lambda v: color[v] != big)
    for s in starts:
        if dfs([s], 1 << s):
            break
    return best[0]


def _path_on(rows: Sequence[int], mask: int, end: int, budget: Budget) -> tuple[int, ...]:
    """A spanning path of ``G[mask]`` ending at ``end`` (known to exist)."""
    path = [end]

    def dfs(x: int, visited: int) -> bool:
        budget.tick()
        if visited == mask:
            return True
        rem = mask & ~visited
        if component_mask(rows, x, rem | (1 << x)) != rem | (1 << x):
            return False
        for y in iter_bits(rows[x] & rem):
            path.append(y)
            if dfs(y, visited | (1 << y)):
                return True
            path.pop()
        return False

    if not dfs(end, 1 << end):
        raise AssertionError("path table inconsistent with search")
    return tuple(reversed(path))


def longest_path_length(g: Graph, engine: str = "auto", budget: Budget | None = None,
                        tables: SubsetTables | None = None) -> int:
    """Vertex count of a longest path."""
    if g.n == 0:
        return 0
    if _engine(g, engine) == "dp":
        return (tables or SubsetTables(g)).longest_path_size()
    return len(longest_path(g, "backtrack", budget))


def cycle_through(g: Graph, S: Iterable[int], engine: str = "auto", budget: Budget | None = None,
                  tables: SubsetTables | None = None) -> OracleVerdict:
    """A cycle containing every vertex of ``S``, or an exact ``no``."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    target = mask_of(S)
    if not target:
        raise ValueError("cycle_through needs a nonempty vertex set")
    if target & ~g.all_mask:
        raise ValueError("vertex set references vertices outside the graph")
    try:
        if _engine(g, engine) == "dp":
            tables = tables or SubsetTables(g)
            hits = [m for m in tables.cycle_masks() if m & target == target]
            cyc = None
            if hits:
                best = min(hits, key=lambda m: (popcount(m), m))
                cyc = _mask_cycle(g, best, budget)
        else:
            cyc = _bt_cycle_through(g.rows, g.all_mask, target, budget)
    except ResourceLimitExceeded as exc:
        return OracleVerdict(LIMIT, nodes=budget.nodes, elapsed=time.perf_counter() - t0,
                             detail={"reason": str(exc)})
    elapsed = time.perf_counter() - t0
    if cyc is None:
        return OracleVerdict(NO, nodes=budget.nodes, elapsed=elapsed)
    return OracleVerdict(YES, CycleCertificate(canonical_cycle(cyc)), budget.nodes, elapsed)


def _bt_cycle_through(rows: Sequence[int], mask: int, target: int,
                      budget: Budget) -> tuple[int, ...] | None:
    """Guided exhaustive search; a cycle lies inside one block, so check blocks."""
    for block in biconnected_blocks(rows, mask):
        if block & target != target or popcount(block) < 3:
            continue
        cyc = _guided_cycle(rows, block, target, budget)
        if cyc is not None:
            return cyc
    return None


def _multi_source_dist(rows: Sequence[int], sources: int, allowed: int) -> dict[int, int]:
    dist = {v: 0 for v in iter_bits(sources)}
    frontier = sources
    seen = sources
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _closing_block(rows: Sequence[int], mask: int, x: int, s: int) -> int:
    r = list(rows)
    r[x] |= 1 << s
    r[s] |= 1 << x
    for b in biconnected_blocks(r, mask):
        if b >> x & 1 and b >> s & 1:
            return b
    return 0


def _guided_cycle(rows: Sequence[int], block: int, target: int,
                  budget: Budget) -> tuple[int, ...] | None:
    s = (target & -target).bit_length() - 1
    path = [s]

    def dfs(x: int, visited: int, todo: int) -> bool:
        budget.tick()
        free = block & ~visited
        if not todo and len(path) >= 3 and rows[x] >> s & 1:
            return True
        if x == s:
            reach = component_mask(rows, x, free | (1 << x))
        else:
            # the rest of the cycle is an x-s path through todo, so it lies in
            # the block containing the edge xs of (free + x + s) + xs
            reach = _closing_block(rows, free | (1 << x) | (1 << s), x, s)
            free &= reach
        if todo & ~reach:
            return False
        goal = todo if todo else rows[s] & free
        if not goal:
            return False
        dist = _multi_source_dist(rows, goal, free)
        nxts = sorted(iter_bits(rows[x] & free), key=lambda w: (dist.get(w, 1 << 20), w))
        for y in nxts:
            if y not in dist:
                continue
            path.append(y)
            if dfs(y, visited | (1 << y), todo & ~(1 << y)):
                return True
            path.pop()
        return False

    if dfs(s, 1 << s, target & ~(1 << s)):
        return tuple(path)
    return None
