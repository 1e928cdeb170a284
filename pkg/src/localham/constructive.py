"""Oriented cycles and paths, local cycle extension and path rotation.

The extension operations are contract searches: inside the radius-12 ball
around the vertex being handled they look for a longer cycle that meets the
stated output contract, keeping every cycle edge that leaves the ball.
Candidates are tried in a fixed order (smallest new cycle first, then the
lexicographically first vertex set, then the lexicographically smallest
canonical cycle on that set), so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, iter_bits, mask_of, popcount, two_coloring
from .metrics import ball_mask
from .oracles import (Budget, CycleCertificate, SubsetTables, canonical_cycle, hamilton_cycle_on, is_valid_cycle,
                      is_valid_path)

LOCALITY_RADIUS = 12
FILTER_MAX_N = 14     # subset tables prefilter candidate sets up to this order

_tables_cache: list = [None, None]


class ContractError(ValueError):
    """Input violates the operation's precondition."""


class NoExtensionFound(RuntimeError):
    """No cycle meeting the contract exists inside the locality ball."""


class RotationUnavailable(RuntimeError):
    """The rotation set is empty, so the input graph violates ``local_mm``."""


@dataclass(frozen=True)
class OrientedCycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            raise ContractError("a cycle needs at least 3 distinct vertices")

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def _index(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ContractError(f"vertex {v} is not on the cycle") from None

    def succ(self, v: int) -> int:
        i = self._index(v)
        return self.vertices[(i + 1) % len(self.vertices)]

    def pred(self, v: int) -> int:
        i = self._index(v)
        return self.vertices[i - 1]

    def segment(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from ``a`` to ``b`` following the orientation (inclusive)."""
        i, j = self._index(a), self._index(b)
        k = len(self.vertices)
        return tuple(self.vertices[(i + t) % k] for t in range((j - i) % k + 1))

    def edges(self) -> set[frozenset[int]]:
        vs = self.vertices
        return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}

    def reversed(self) -> "OrientedCycle":
        return OrientedCycle(tuple(reversed(self.vertices)))

    def canonical(self) -> "OrientedCycle":
        return OrientedCycle(canonical_cycle(self.vertices))

    def certificate(self) -> CycleCertificate:
        return CycleCertificate(canonical_cycle(self.vertices))


def successor_set(C: OrientedCycle, S: Iterable[int]) -> set[int]:
    return {C.succ(x) for x in S}


def predecessor_set(C: OrientedCycle, S: Iterable[int]) -> set[int]:
    return {C.pred(x) for x in S}


@dataclass(frozen=True)
class OrientedPath:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def is_maximal(self, g: Graph) -> bool:
        on = mask_of(self.vertices)
        return not (g.rows[self.vertices[0]] & ~on or g.rows[self.vertices[-1]] & ~on)

    def f(self, g: Graph) -> int:
        """Largest 1-based index of a neighbour of the origin along the path."""
        v1 = self.vertices[0]
        if g.degree(v1) < 2:
            raise ContractError("f(P) is undefined when the origin has degree < 2")
        if not self.is_maximal(g):
            raise ContractError("f(P) is defined for maximal paths only")
        return max(i + 1 for i, x in enumerate(self.vertices) if g.has_edge(v1, x))


# -- local extension ------------------------------------------------------------------


def _forced_edges(g: Graph, C: OrientedCycle, ball: int) -> list[tuple[int, int]]:
    """Cycle edges with an endpoint outside the locality ball must survive."""
    out = []
    vs = C.vertices
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        if not (ball >> a & 1 and ball >> b & 1):
            out.append((a, b))
    return out


def _tables(g: Graph) -> SubsetTables | None:
    """Exact Hamiltonicity of every vertex subset, kept for the last graph seen."""
    if g.n > FILTER_MAX_N:
        return None
    if _tables_cache[0] is not g:
        _tables_cache[0], _tables_cache[1] = g, SubsetTables(g)
    return _tables_cache[1]


def _search(g: Graph, C: OrientedCycle, ball: int, candidate_sets, budget: Budget | None):
    forced = _forced_edges(g, C, ball)
    tables = _tables(g) if not forced else None
    for T in candidate_sets:
        if tables is not None and not tables.has_cycle_on(T):
            continue
        # every off-ball cycle vertex is kept and lies on a forced edge
        cyc = hamilton_cycle_on(g.rows, T, forced=forced, budget=budget, order="lex")
        if cyc is not None:
            return OrientedCycle(cyc)
    return None


def _tiers_extend(g: Graph, C: OrientedCycle, u: int, ball: int):
    on = mask_of(C.vertices)
    cyc_in_ball = sorted(v for v in C.vertices if ball >> v & 1)
    off = sorted(iter_bits(ball & ~on))
    nu = g.rows[u]
    for grow in range(1, len(off) + 1):
        tier = set()
        for drop in (0, 1):
            k = grow + drop
            if k > len(off):
                continue
            drops = [()] if drop == 0 else [(d,) for d in cyc_in_ball]
            for D in drops:
                base = on & ~mask_of(D)
                for A in combinations(off, k):
                    T = base | mask_of(A)
                    if T & nu:
                        tier.add(T)
        yield sorted(tier, key=lambda m: tuple(iter_bits(m)))


def _tiers_absorb(g: Graph, C: OrientedCycle, v: int, ball: int):
    on = mask_of(C.vertices) | (1 << v)
    off = sorted(iter_bits(ball & ~on))
    for k in range(0, len(off) + 1):
        yield sorted((on | mask_of(A) for A in combinations(off, k)), key=lambda m: tuple(iter_bits(m)))


def extend_cycle_locally(g: Graph, C: OrientedCycle, u: int, budget: Budget | None = None) -> OrientedCycle:
    """A longer cycle through a neighbour of ``u`` that differs from ``C`` only near ``u``.

    Requires ``u`` off the cycle, with a neighbour on it and a neighbour off it.
    At most one vertex of ``C`` is dropped.
    """
    on = mask_of(C.vertices)
    if on >> u & 1:
        raise ContractError(f"vertex {u} is already on the cycle")
    if not is_valid_cycle(g, C.vertices):
        raise ContractError("input is not a cycle of the graph")
    if not g.rows[u] & on:
        raise ContractError(f"vertex {u} has no neighbour on the cycle")
    if not g.rows[u] & ~on:
        raise ContractError(f"every neighbour of {u} is on the cycle; use absorb_vertex")
    ball = ball_mask(g.rows, u, LOCALITY_RADIUS)
    for tier in _tiers_extend(g, C, u, ball):
        found = _search(g, C, ball, tier, budget)
        if found is not None:
            return found
    raise NoExtensionFound(f"no longer cycle near vertex {u}")


def absorb_vertex(g: Graph, C: OrientedCycle, v: int, budget: Budget | None = None) -> OrientedCycle:
    """A cycle on ``V(C) + v`` (plus as few extra vertices as possible) changed only near ``v``."""
    on = mask_of(C.vertices)
    if on >> v & 1:
        raise ContractError(f"vertex {v} is already on the cycle")
    if not is_valid_cycle(g, C.vertices):
        raise ContractError("input is not a cycle of the graph")
    if g.rows[v] & ~on or not g.rows[v]:
        raise ContractError(f"vertex {v} has a neighbour off the cycle")
    ball = ball_mask(g.rows, v, LOCALITY_RADIUS)
    for tier in _tiers_absorb(g, C, v, ball):
        found = _search(g, C, ball, tier, budget)
        if found is not None:
            return found
    raise NoExtensionFound(f"cannot absorb vertex {v}")


def locality_violation(g: Graph, old: OrientedCycle, new: OrientedCycle, center: int,
                       radius: int = LOCALITY_RADIUS) -> str | None:
    """``None`` if every vertex and edge change lies inside ``M_radius(center)``."""
    ball = ball_mask(g.rows, center, radius)
    sym = old.vertex_set ^ new.vertex_set
    outside = [v for v in sym if not ball >> v & 1]
    if outside:
        return f"vertices {sorted(outside)} changed outside the ball"
    for e in old.edges() ^ new.edges():
        if any(not ball >> x & 1 for x in e):
            return f"edge {sorted(e)} changed outside the ball"
    return None


@dataclass
class GrowStep:
    op: str
    vertex: int
    before: tuple[int, ...]
    after: tuple[int, ...]


def grow_to_hamiltonian(g: Graph, start: Sequence[int], budget: Budget | None = None,
                        check: bool = True) -> tuple[OrientedCycle, list[GrowStep]]:
    """Repeat absorb/extend from ``start`` until the cycle is spanning.

    Each round absorbs the smallest off-cycle vertex whose neighbours all lie
    on the cycle, or else extends at the smallest off-cycle vertex adjacent
    to the cycle. With ``check`` every step is validated against its
    contract and :class:`ContractError` is raised on a violation.
    """
    C = OrientedCycle(tuple(start))
    if not is_valid_cycle(g, C.vertices):
        raise ContractError("start is not a cycle of the graph")
    steps: list[GrowStep] = []
    while len(C) < g.n:
        on = mask_of(C.vertices)
        off = list(iter_bits(g.all_mask & ~on))
        absorbable = [v for v in off if g.rows[v] and not g.rows[v] & ~on]
        if absorbable:
            v = absorbable[0]
            new = absorb_vertex(g, C, v, budget)
            op = "absorb"
            ok = (on | (1 << v)) & ~mask_of(new.vertices) == 0
        else:
            touching = [x for x in off if g.rows[x] & on]
            if not touching:
                raise ContractError("graph is disconnected from the cycle")
            v = touching[0]
            new = extend_cycle_locally(g, C, v, budget)
            op = "extend"
            ok = bool(mask_of(new.vertices) & g.rows[v]) and popcount(on & ~mask_of(new.vertices)) <= 1
        if check:
            if not is_valid_cycle(g, new.vertices) or len(new) <= len(C) or not ok:
                raise ContractError(f"{op} at {v} broke its output contract")
            why = locality_violation(g, C, new, v)
            if why:
                raise ContractError(f"{op} at {v}: {why}")
        steps.append(GrowStep(op, v, C.vertices, new.vertices))
        C = new
    return C, steps


# -- path rotation -----------------------------------------------------------------------


def _check_balanced_bipartite(g: Graph) -> None:
    color = two_coloring(g.rows)
    if color is None or 2 * sum(color) != g.n:
        raise ContractError("graph is not balanced bipartite")


def mm_rotate(g: Graph, P: OrientedPath, check_graph: bool = True) -> OrientedPath:
    """One rotation step that keeps ``V(P)`` and strictly increases ``f``.

    With ``N(v_1) = {v_{i_1}, ..., v_{i_p}}`` the rotation uses the smallest
    ``r >= 2`` with ``v_{i_r - 1} v_{i_p + 2}`` an edge and returns
    ``v_{i_p+1} <-P v_{i_r} v_1 ->P v_{i_r - 1} v_{i_p+2} ->P v_n``.
    """
    if check_graph:
        _check_balanced_bipartite(g)
    vs = P.vertices
    if not is_valid_path(g, vs):
        raise ContractError("input is not a path of the graph")
    f = P.f(g)
    m = len(vs)
    t2 = 2 * (m // 2)
    if f >= t2:
        raise ContractError(f"f(P) = {f} is already 2*floor(|P|/2) = {t2}")
    v1 = vs[0]
    idx = [i + 1 for i, x in enumerate(vs) if g.has_edge(v1, x)]  # 1-based
    ip = idx[-1]
    target = vs[ip + 1]  # v_{i_p+2}
    r_ok = [k for k in range(1, len(idx)) if g.has_edge(vs[idx[k] - 2], target)]
    if not r_ok:
        raise RotationUnavailable(f"no v_(i_r - 1) adjacent to v_{ip + 2}")
    ir = idx[r_ok[0]]
    # 0-based slices: v_{ip+1}..v_{ir} reversed, v_1..v_{ir-1}, v_{ip+2}..v_n
    q = list(reversed(vs[ir - 1: ip + 1])) + list(vs[: ir - 1]) + list(vs[ip + 1:])
    Q = OrientedPath(tuple(q))
    if not is_valid_path(g, Q.vertices) or set(q) != set(vs):
        raise AssertionError("rotation produced an invalid path")
    if not Q.is_maximal(g):
        raise ContractError("the rotated path extends, so the input path was not longest")
    return Q


def mm_close_to_cycle(g: Graph, P: OrientedPath, max_steps: int | None = None) -> tuple[CycleCertificate, int]:
    """Rotate until ``f(P) = 2*floor(|P|/2)``, then close ``v_1 ->P v_2t v_1``.

    Returns the cycle and the number of rotations used.
    """
    _check_balanced_bipartite(g)
    m = len(P)
    t2 = 2 * (m // 2)
    steps = 0
    limit = max_steps if max_steps is not None else m * m
    while P.f(g) < t2:
        P = mm_rotate(g, P, check_graph=False)
        steps += 1
        if steps > limit:
            raise AssertionError("rotation did not terminate")
    cyc = P.vertices[:t2]
    if not is_valid_cycle(g, cyc):
        raise AssertionError("closing edge missing")
    return CycleCertificate(canonical_cycle(cyc)), steps
