"""Infinite locally finite graphs given by neighbour oracles.

Nothing infinite is ever built. A :class:`Window` is the finite ball of
radius ``R`` around an anchor, materialised by BFS. Window checks only
quantify over centers whose relevant ball lies inside the window, and use
the oracle's true degrees, so every evaluated inequality is exact.

The Hamiltonian-curve side is handled through its finite criterion: for
each probed finite vertex set ``S`` a cycle through ``S`` is searched inside
the window of radius ``r + 12`` around a vertex of ``S``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .conditions import NA, ConditionReport, GraphContext, evaluate, get_condition
from .graph import Graph, GraphInputError, iter_bits, mask_of
from .metrics import is_two_connected_mask, independence_number, vertex_connectivity
from .oracles import Budget, OracleVerdict, cycle_through

CURVE_WINDOW_SLACK = 12


class OracleAsymmetry(GraphInputError):
    pass


class AdjacencyOracle:
    """Deterministic, symmetric, locally finite neighbour function on opaque ids."""

    root: int = 0

    def neighbors(self, v: int) -> list[int]:
        raise NotImplementedError

    def describe(self) -> str:
        return type(self).__name__


class FunctionOracle(AdjacencyOracle):
    def __init__(self, root: int, fn: Callable[[int], Iterable[int]], name: str = "function"):
        self.root = root
        self._fn = fn
        self._name = name

    def neighbors(self, v: int) -> list[int]:
        return sorted(set(self._fn(v)))

    def describe(self) -> str:
        return self._name


def _zigzag(i: int) -> int:
    return 2 * i if i >= 0 else -2 * i - 1


def _unzigzag(z: int) -> int:
    return z // 2 if z % 2 == 0 else -(z + 1) // 2


class LayeredOracle(AdjacencyOracle):
    """Layers ``V_i`` (``i`` in Z) of size ``p``; ``x ~ y`` iff both lie in some ``V_i u V_{i+1}``.

    Degree is ``3p - 1``; ``p = 1`` is the two-way infinite path.
    """

    def __init__(self, p: int):
        if p < 1:
            raise GraphInputError("layer size must be >= 1")
        self.p = p
        self.root = self.encode(0, 0)

    def encode(self, layer: int, slot: int) -> int:
        if not 0 <= slot < self.p:
            raise GraphInputError("slot out of range")
        return _zigzag(layer) * self.p + slot

    def decode(self, v: int) -> tuple[int, int]:
        if v < 0:
            raise GraphInputError(f"invalid vertex id {v}")
        return _unzigzag(v // self.p), v % self.p

    def layer(self, v: int) -> int:
        return self.decode(v)[0]

    def neighbors(self, v: int) -> list[int]:
        i, s = self.decode(v)
        out = [self.encode(j, t) for j in (i - 1, i, i + 1) for t in range(self.p)]
        out.remove(v)
        return sorted(out)

    def describe(self) -> str:
        return f"layered(p={self.p})"


def two_way_path() -> LayeredOracle:
    return LayeredOracle(1)


ORACLES: dict[str, Callable[..., AdjacencyOracle]] = {
    "layered": LayeredOracle,
    "path": two_way_path,
}


def make_oracle(name: str, *params: int) -> AdjacencyOracle:
    try:
        return ORACLES[name](*params)
    except KeyError:
        raise GraphInputError(f"unknown oracle {name!r}; known: {', '.join(sorted(ORACLES))}") from None
    except TypeError as exc:
        raise GraphInputError(f"bad parameters for oracle {name!r}: {exc}") from None


# -- windows ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    graph: Graph
    ids: tuple[int, ...]            # dense id -> oracle id
    index: dict = field(hash=False, compare=False)  # oracle id -> dense id
    anchor: int
    radius: int
    dist: tuple[int, ...]           # distance from the anchor
    degrees: tuple[int, ...]        # true degrees in the infinite graph
    complete: int                   # dense ids whose neighbourhood is inside the window

    def dense(self, oracle_ids: Iterable[int]) -> list[int]:
        try:
            return [self.index[v] for v in oracle_ids]
        except KeyError as exc:
            raise GraphInputError(f"vertex {exc.args[0]} is outside the window") from None

    def to_oracle(self, dense_ids: Iterable[int]) -> list[int]:
        return [self.ids[v] for v in dense_ids]


def materialize_window(o: AdjacencyOracle, anchor: int, R: int) -> Window:
    """BFS-materialise ``M_R(anchor)``; raises :class:`OracleAsymmetry` on a broken oracle."""
    if R < 0:
        raise GraphInputError("window radius must be non-negative")
    dist = {anchor: 0}
    order = [anchor]
    nbrs: dict[int, list[int]] = {}
    queue = deque([anchor])
    while queue:
        v = queue.popleft()
        nb = nbrs[v] = list(o.neighbors(v))
        if v in nb:
            raise OracleAsymmetry(f"oracle reports a loop at {v}")
        if dist[v] == R:
            continue
        for w in nb:
            if w not in dist:
                dist[w] = dist[v] + 1
                order.append(w)
                queue.append(w)
    index = {v: i for i, v in enumerate(order)}
    rows = [0] * len(order)
    complete = 0
    for v in order:
        i = index[v]
        inside = True
        for w in nbrs[v]:
            j = index.get(w)
            if j is None:
                inside = False
                continue
            if v not in nbrs[w]:
                raise OracleAsymmetry(f"{w} is a neighbour of {v} but not conversely")
            rows[i] |= 1 << j
        if inside:
            complete |= 1 << i
    g = Graph(len(order), tuple(rows))
    return Window(g, tuple(order), index, anchor, R, tuple(dist[v] for v in order),
                  tuple(len(nbrs[v]) for v in order), complete)


def window_is_faithful(o: AdjacencyOracle, w: Window) -> bool:
    """Re-query every materialised vertex and compare with its window row."""
    for i, v in enumerate(w.ids):
        want = {w.index[x] for x in o.neighbors(v) if x in w.index}
        if want != set(iter_bits(w.graph.rows[i])):
            return False
        if len(o.neighbors(v)) != w.degrees[i]:
            return False
    return True


def condition_reach(cid: str, params: dict | None = None) -> int:
    cond = get_condition(cid)
    if cid == "infinite_ce":
        return (params or {}).get("r", 1) + 1
    if cond.window_reach is None:
        raise GraphInputError(f"{cid} has no window form")
    return cond.window_reach


def windowed_condition_check(o: AdjacencyOracle, anchor: int, R: int, cid: str,
                             params: dict | None = None, window: Window | None = None) -> ConditionReport:
    """Evaluate a window condition at every center ``v`` with ``d(anchor, v) <= R - reach``."""
    reach = condition_reach(cid, params)
    if R < reach:
        return ConditionReport(cid, NA, reason=f"window radius {R} < reach {reach}")
    w = window or materialize_window(o, anchor, R)
    centers = mask_of(i for i, d in enumerate(w.dist) if d <= R - reach)
    ctx = GraphContext(w.graph, degrees=w.degrees, complete=w.complete, centers=centers)
    rep = evaluate(ctx, cid, params, scope=False)
    if rep.witness is not None:
        wit = dict(rep.witness)
        if wit.get("center") is not None:
            wit["oracle_center"] = w.ids[wit["center"]]
        wit["oracle_vertices"] = w.to_oracle(wit["vertices"])
        rep = ConditionReport(rep.id, rep.verdict, wit)
    return rep


def checkable_centers(w: Window, cid: str, params: dict | None = None) -> list[int]:
    reach = condition_reach(cid, params)
    return [w.ids[i] for i, d in enumerate(w.dist) if d <= w.radius - reach]


def _oracle_ball(o: AdjacencyOracle, v: int, r: int) -> dict[int, int]:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dist[x] == r:
            continue
        for y in o.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def verify_window_witness(o: AdjacencyOracle, report: ConditionReport, params: dict | None = None) -> bool:
    """Recompute a window witness directly from the oracle (no window reuse)."""
    w = report.witness
    if report.verdict != "fail" or w is None:
        return False
    c = w.get("oracle_center")
    vs = w["oracle_vertices"]
    deg = lambda x: len(o.neighbors(x))

    def induced(center, r):
        ball = _oracle_ball(o, center, r)
        ids = sorted(ball)
        pos = {x: i for i, x in enumerate(ids)}
        edges = [(pos[a], pos[b]) for a in ids for b in o.neighbors(a) if b in pos and pos[a] < pos[b]]
        from .graph import from_edge_list
        return from_edge_list(len(ids), edges), pos, ball

    kind = w["kind"]
    if kind == "ball-not-2-connected":
        g, _, _ = induced(c, w["radius"])
        return not is_two_connected_mask(g.rows, g.all_mask)
    if report.id in ("infinite_kappa", "infinite_kappa_single"):
        g, pos, ball = induced(c, 3)
        inner = [x for x in vs if all(y in ball for y in o.neighbors(x))]
        if len(inner) != len(vs):
            return False
        k = vertex_connectivity(g)
        if kind == "triple":
            x, y, z = vs
            nbr = lambda a, b: b in o.neighbors(a)
            if nbr(x, y) or nbr(x, z) or nbr(y, z):
                return False
            return deg(x) + deg(y) + deg(z) < len(ball) + k
        return 3 * deg(vs[0]) < len(ball) + k
    if report.id == "infinite_jung":
        u, x, v = vs
        if x not in o.neighbors(u) or v not in o.neighbors(x) or v in o.neighbors(u):
            return False
        return deg(u) + deg(v) < len(_oracle_ball(o, x, 2)) - 1
    if report.id == "infinite_ce":
        r = (params or {}).get("r", 1)
        g1, _, _ = induced(c, r)
        g2, _, _ = induced(c, r + 1)
        return vertex_connectivity(g1) < independence_number(g2)
    return False


# -- curve probe ----------------------------------------------------------------------------


@dataclass
class ProbeResult:
    found: bool
    S: tuple[int, ...]
    anchor: int
    r: int
    window_radius: int
    window_size: int
    cycle: tuple[int, ...] | None = None   # oracle ids
    verdict: OracleVerdict | None = None

    def to_dict(self) -> dict:
        out = {"found": self.found, "S": list(self.S), "anchor": self.anchor, "r": self.r,
               "window_radius": self.window_radius, "window_size": self.window_size}
        if self.cycle is not None:
            out["cycle"] = list(self.cycle)
        if self.verdict is not None and self.verdict.answer == "resource-limit":
            out["resource_limit"] = True
        return out


def _distances_to(o: AdjacencyOracle, a: int, targets: set[int], max_radius: int) -> int:
    dist = {a: 0}
    left = set(targets) - {a}
    queue = deque([a])
    best = 0
    while queue and left:
        x = queue.popleft()
        if dist[x] >= max_radius:
            break
        for y in o.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                if y in left:
                    left.discard(y)
                    best = dist[y]
                queue.append(y)
    if left:
        raise GraphInputError(f"vertices {sorted(left)} not reached within radius {max_radius}")
    return best


def curve_probe(o: AdjacencyOracle, S: Iterable[int], slack: int = CURVE_WINDOW_SLACK,
                budget: Budget | None = None, max_radius: int = 1000) -> ProbeResult:
    """Search a cycle through ``S`` inside ``M_{r+slack}(a)`` where ``a = min(S)``."""
    S = tuple(sorted(set(S)))
    if not S:
        raise GraphInputError("S must be nonempty")
    a = S[0]
    r = _distances_to(o, a, set(S), max_radius)
    R = r + slack
    w = materialize_window(o, a, R)
    verdict = cycle_through(w.graph, w.dense(S), engine="backtrack", budget=budget)
    cyc = tuple(w.to_oracle(verdict.certificate.vertices)) if verdict.yes else None
    return ProbeResult(verdict.yes, S, a, r, R, w.graph.n, cyc, verdict)


def validate_oracle_cycle(o: AdjacencyOracle, cycle: Sequence[int], S: Iterable[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle) or not set(S) <= set(cycle):
        return False
    return all(cycle[(i + 1) % len(cycle)] in o.neighbors(cycle[i]) for i in range(len(cycle)))


def random_layered_sets(o: LayeredOracle, count: int, max_size: int = 6, spread: int = 8,
                        seed: int = 0) -> list[tuple[int, ...]]:
    """Random finite vertex sets whose layers span at most ``spread`` consecutive layers."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        base = rng.randint(-20, 20)
        k = rng.randint(1, max_size)
        S = {o.encode(base + rng.randint(0, spread), rng.randrange(o.p)) for _ in range(k)}
        out.append(tuple(sorted(S)))
    return out
