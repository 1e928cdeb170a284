"""Global and ball-based sufficient conditions as checkable predicates.

Every entry of :data:`CATALOG` evaluates one quantified inequality and, when
it fails, returns the first violating tuple (in ascending vertex order of
center, then tuple) together with both sides of the inequality.

Degrees are always degrees in the parent graph. The ``*_lifted`` entries
and :func:`lift_to_balls` are the exception: there a ball is treated as a
graph in its own right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .graph import Graph, bipartition, component_mask, induced_subgraph, iter_bits, popcount
from .metrics import (
    ball as ball_view,
    cut_vertices_mask,
    distances_from,
    independence_number,
    independence_number_mask,
    interior_mask,
    is_connected_mask,
    is_two_connected_mask,
    max_independent_set_mask,
    sphere,
    sphere_layers,
    vertex_connectivity,
    vertex_connectivity_mask,
)

HAMILTONIAN = "hamiltonian"
DOMINATING = "dominating-longest-cycles"
CURVE = "hamiltonian-curve-criterion"

PASS, FAIL, NA = "pass", "fail", "not-applicable"


class UnknownCondition(KeyError):
    pass


@dataclass
class ConditionReport:
    id: str
    verdict: str
    witness: dict | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        out = {"condition": self.id, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _w(kind: str, center, vertices, lhs=None, rhs=None, **extra) -> dict:
    d = {"kind": kind, "center": center, "vertices": list(vertices), "lhs": lhs, "rhs": rhs}
    d.update(extra)
    return d


# -- evaluation context ---------------------------------------------------------


class GraphContext:
    """Per-graph caches shared by all condition evaluations.

    For a window cut out of an infinite graph, ``degrees`` are the true
    degrees, ``complete`` marks vertices whose whole neighbourhood was
    materialised and ``centers`` restricts the quantified centers to those
    whose relevant ball lies inside the window.
    """

    def __init__(self, g: Graph, degrees: Sequence[int] | None = None,
                 complete: int | None = None, centers: int | None = None):
        self.g = g
        self.n = g.n
        self.rows = g.rows
        self.full = g.all_mask
        self.deg = list(degrees) if degrees is not None else g.degrees()
        self.complete = self.full if complete is None else complete
        self.centers = self.full if centers is None else centers
        self._layers: dict[int, list[int]] = {}
        self._kappa: dict[int, int] = {}
        self._alpha: dict[int, int] = {}
        self._two: dict[int, bool] = {}
        self._bip = False
        self._bip_val = None
        self._connected: bool | None = None

    # distances and balls
    def layers(self, u: int) -> list[int]:
        lay = self._layers.get(u)
        if lay is None:
            lay = self._layers[u] = sphere_layers(self.rows, u)
        return lay

    def sphere(self, u: int, r: int) -> int:
        lay = self.layers(u)
        return lay[r] if r < len(lay) else 0

    def ball(self, u: int, r: int) -> int:
        m = 0
        for x in self.layers(u)[: r + 1]:
            m |= x
        return m

    def dist(self, u: int, v: int) -> int:
        for d, layer in enumerate(self.layers(u)):
            if layer >> v & 1:
                return d
        return -1

    def interior(self, u: int, r: int) -> int:
        return interior_mask(self.rows, self.ball(u, r)) & self.complete

    # cached invariants on vertex masks
    def kappa(self, mask: int) -> int:
        k = self._kappa.get(mask)
        if k is None:
            k = self._kappa[mask] = vertex_connectivity_mask(self.rows, mask)
        return k

    def alpha(self, mask: int) -> int:
        a = self._alpha.get(mask)
        if a is None:
            a = self._alpha[mask] = independence_number_mask(self.rows, mask)
        return a

    def two_connected(self, mask: int) -> bool:
        t = self._two.get(mask)
        if t is None:
            t = self._two[mask] = is_two_connected_mask(self.rows, mask)
        return t

    @property
    def connected(self) -> bool:
        if self._connected is None:
            self._connected = is_connected_mask(self.rows, self.full)
        return self._connected

    @property
    def bipartition(self):
        if not self._bip:
            self._bip_val = bipartition(self.g)
            self._bip = True
        return self._bip_val

    def regular_degree(self) -> int | None:
        ds = set(self.deg)
        return ds.pop() if len(ds) == 1 else None


# -- shared helpers ---------------------------------------------------------------


def _first_triple_below(rows: Sequence[int], deg: Sequence[int], X: int, bound: int):
    """First independent triple ``x<y<z`` of ``X`` with degree sum below ``bound``."""
    for x in iter_bits(X):
        dx = deg[x]
        sx = X & ~rows[x] & ~((2 << x) - 1)
        for y in iter_bits(sx):
            need = bound - dx - deg[y]
            for z in iter_bits(sx & ~rows[y] & ~((2 << y) - 1)):
                if deg[z] < need:
                    return (x, y, z)
    return None


def _first_pair_below(rows, deg, X: int, bound: int):
    """First nonadjacent pair ``u<v`` of ``X`` with ``d(u)+d(v) < bound``."""
    for u in iter_bits(X):
        for v in iter_bits(X & ~rows[u] & ~((2 << u) - 1)):
            if deg[u] + deg[v] < bound:
                return (u, v)
    return None


def _ball_cut_vertex(ctx: GraphContext, mask: int) -> int | None:
    cuts = cut_vertices_mask(ctx.rows, mask)
    return cuts[0] if cuts else None


def _balls_two_connected(ctx: GraphContext, r: int, center: int | None = None):
    """Witness for the first center whose radius-``r`` ball is not 2-connected."""
    it = [center] if center is not None else iter_bits(ctx.centers)
    for v in it:
        b = ctx.ball(v, r)
        if not ctx.two_connected(b):
            cut = _ball_cut_vertex(ctx, b)
            return _w("ball-not-2-connected", v, [] if cut is None else [cut],
                      lhs=popcount(b), rhs=None, radius=r)
    return None


def _global_two_connected(ctx: GraphContext):
    if ctx.two_connected(ctx.full):
        return None
    cut = _ball_cut_vertex(ctx, ctx.full) if ctx.n >= 3 else None
    return _w("not-2-connected", None, [] if cut is None else [cut])


def _paths_uxv(ctx: GraphContext, bound_of: Callable[[int, int, int], int]):
    """First path ``uxv`` (``u<v``, ``uv`` a non-edge) with ``d(u)+d(v) < bound``."""
    rows, deg = ctx.rows, ctx.deg
    for x in iter_bits(ctx.centers):
        nx_ = rows[x]
        for u in iter_bits(nx_):
            for v in iter_bits(nx_ & ~rows[u] & ~((2 << u) - 1)):
                rhs = bound_of(u, x, v)
                if deg[u] + deg[v] < rhs:
                    return _w("pair", x, [u, x, v], deg[u] + deg[v], rhs)
    return None


# -- evaluators ---------------------------------------------------------------------


def _dirac(ctx, p):
    for u in range(ctx.n):
        if 2 * ctx.deg[u] < ctx.n:
            return _w("vertex", None, [u], ctx.deg[u], ctx.n / 2)
    return None


def _ore(ctx, p):
    hit = _first_pair_below(ctx.rows, ctx.deg, ctx.full, ctx.n)
    if hit:
        u, v = hit
        return _w("pair", None, [u, v], ctx.deg[u] + ctx.deg[v], ctx.n,
                  distance=ctx.dist(u, v))
    return None


def _chvatal_erdos(ctx, p):
    k, a = ctx.kappa(ctx.full), ctx.alpha(ctx.full)
    if k < a:
        return _w("kappa-alpha", None, list(iter_bits(max_independent_set_mask(ctx.rows, ctx.full))), k, a)
    return None


def _oberly_sumner(ctx, p):
    if not ctx.connected:
        return _w("disconnected", None, [])
    rows = ctx.rows
    for v in range(ctx.n):
        if not is_connected_mask(rows, rows[v]):
            return _w("not-locally-connected", v, [v])
    for v in range(ctx.n):
        for a in iter_bits(rows[v]):
            free_a = rows[v] & ~rows[a] & ~((2 << a) - 1)
            for b in iter_bits(free_a):
                cs = free_a & ~rows[b] & ~((2 << b) - 1)
                if cs:
                    return _w("claw", v, [v, a, b, (cs & -cs).bit_length() - 1])
    return None


def _local_ore_l0(ctx, p):
    rows = ctx.rows
    return _paths_uxv(ctx, lambda u, x, v: popcount(rows[u] | rows[v] | rows[x]))


def _lifted_dirac(r):
    def ev(ctx, p):
        rows = ctx.rows
        for u in iter_bits(ctx.centers):
            b = ctx.ball(u, r)
            size = popcount(b)
            for v in iter_bits(b):
                d = popcount(rows[v] & b)
                if 2 * d < size:
                    return _w("vertex", u, [v], d, size / 2, radius=r)
        return None
    return ev


def _lifted_ore(r):
    def ev(ctx, p):
        rows = ctx.rows
        for u in iter_bits(ctx.centers):
            b = ctx.ball(u, r)
            size = popcount(b)
            bdeg = {v: popcount(rows[v] & b) for v in iter_bits(b)}
            for a in iter_bits(b):
                for c in iter_bits(b & ~rows[a] & ~((2 << a) - 1)):
                    if bdeg[a] + bdeg[c] < size:
                        return _w("pair", u, [a, c], bdeg[a] + bdeg[c], size, radius=r)
        return None
    return ev


def ce_radius(n: int) -> int:
    return math.isqrt(2 * n - 3)


def _ce_ball_sqrt(ctx, p):
    r = ce_radius(ctx.n)
    for u in iter_bits(ctx.centers):
        b = ctx.ball(u, r)
        k, a = ctx.kappa(b), ctx.alpha(b)
        if k < a:
            return _w("kappa-alpha", u, list(iter_bits(max_independent_set_mask(ctx.rows, b))), k, a, radius=r)
    return None


def _local_dirac(r):
    def ev(ctx, p):
        for u in iter_bits(ctx.centers):
            size = popcount(ctx.ball(u, r))
            if 2 * ctx.deg[u] < size:
                return _w("vertex", u, [u], ctx.deg[u], size / 2, radius=r)
        return None
    return ev


def _local_ore_m3_interior(ctx, p):
    for x in iter_bits(ctx.centers):
        size = popcount(ctx.ball(x, 3))
        hit = _first_pair_below(ctx.rows, ctx.deg, ctx.interior(x, 3), size)
        if hit:
            u, v = hit
            return _w("pair", x, [u, v], ctx.deg[u] + ctx.deg[v], size, radius=3)
    return None


def _local_ore_m2(ctx, p):
    return _paths_uxv(ctx, lambda u, x, v: popcount(ctx.ball(x, 2)))


def _local_ore_regular(ctx, p):
    k = ctx.regular_degree()
    for x in iter_bits(ctx.centers):
        size = popcount(ctx.ball(x, 2))
        if 2 * k < size:
            return _w("vertex", x, [x], 2 * k, size, radius=2)
    return None


def _sphere2_below_degree(ctx, p):
    k = ctx.regular_degree()
    for x in iter_bits(ctx.centers):
        s = popcount(ctx.sphere(x, 2))
        if s >= k:
            # violation of |N_2(x)| < k, reported as k <= |N_2(x)|
            return _w("vertex", x, [x], k, s, radius=2)
    return None


def _bondy_global(ctx, p):
    w = _global_two_connected(ctx)
    if w:
        return w
    hit = _first_triple_below(ctx.rows, ctx.deg, ctx.full, ctx.n + 2)
    if hit:
        return _w("triple", None, hit, sum(ctx.deg[v] for v in hit), ctx.n + 2)
    return None


def _triples_over_balls(ctx, ball_r: int, select: Callable[[int], int], extra: Callable[[int, int], int],
                        upper: Callable[[int, int], int] | None = None, lower: int = 0):
    """Shared loop for the local triple conditions.

    For each center ``v`` the bound is ``|M_r(v)| + extra(v, ball)``.
    ``upper``/``lower`` bracket ``extra`` so the expensive quantity is only
    computed when a triple lands between the cheap bounds.
    """
    rows, deg = ctx.rows, ctx.deg
    for v in iter_bits(ctx.centers):
        b = ctx.ball(v, ball_r)
        size = popcount(b)
        X = select(v)
        if upper is not None:
            if _first_triple_below(rows, deg, X, size + upper(v, b)) is None:
                continue
        bound = size + extra(v, b)
        hit = _first_triple_below(rows, deg, X, bound)
        if hit:
            return _w("triple", v, hit, sum(deg[t] for t in hit), bound, radius=ball_r)
    return None


def _bondy_ball4(ctx, p):
    w = _balls_two_connected(ctx, 4)
    if w:
        return w
    return _triples_over_balls(ctx, 4, lambda v: ctx.interior(v, 4), lambda v, b: 2)


def _local_bondy_degree(ctx):
    return _triples_over_balls(ctx, 3, lambda v: ctx.ball(v, 2), lambda v, b: 2)


def _local_bondy(ctx, p):
    return _balls_two_connected(ctx, 3) or _local_bondy_degree(ctx)


def _local_bondy_general(ctx, p):
    w = _local_bondy_degree(ctx)
    if w:
        return w
    rows = ctx.rows
    for v in iter_bits(ctx.centers):
        b = ctx.ball(v, 3)
        if ctx.two_connected(b):
            continue
        n2, n3, n4 = ctx.sphere(v, 2), ctx.sphere(v, 3), ctx.sphere(v, 4)
        for u in cut_vertices_mask(rows, b):
            if not n2 >> u & 1:
                return _w("cut-vertex-clause", v, [u], reason="cut vertex outside N_2(v)")
            rest = b & ~(1 << u)
            comps = []
            left = rest
            while left:
                s = (left & -left).bit_length() - 1
                c = component_mask(rows, s, left)
                comps.append(c)
                left &= ~c
            for i, ci in enumerate(comps):
                for cj in comps[i + 1:]:
                    for a in iter_bits(ci & n3):
                        for c in iter_bits(cj & n3):
                            if not rows[a] & rows[c] & n4:
                                x, y = min(a, c), max(a, c)
                                return _w("cut-vertex-clause", v, [u, x, y],
                                          reason="no common neighbour in N_4(v)")
    return None


def _kappa_upper(ctx, mask: int) -> int:
    return min(min(popcount(ctx.rows[x] & mask) for x in iter_bits(mask)), popcount(mask) - 1)


def _haggkvist(ctx, p):
    w = _global_two_connected(ctx)
    if w:
        return w
    dmin = min(ctx.deg)
    if 3 * dmin >= ctx.n + _kappa_upper(ctx, ctx.full):
        return None
    k = ctx.kappa(ctx.full)
    for u in range(ctx.n):
        if 3 * ctx.deg[u] < ctx.n + k:
            return _w("vertex", None, [u], ctx.deg[u], (ctx.n + k) / 3, kappa=k)
    return None


def _bauer(ctx, p):
    w = _global_two_connected(ctx)
    if w:
        return w
    if _first_triple_below(ctx.rows, ctx.deg, ctx.full, ctx.n + _kappa_upper(ctx, ctx.full)) is None:
        return None
    k = ctx.kappa(ctx.full)
    hit = _first_triple_below(ctx.rows, ctx.deg, ctx.full, ctx.n + k)
    if hit:
        return _w("triple", None, hit, sum(ctx.deg[t] for t in hit), ctx.n + k, kappa=k)
    return None


def _local_kappa_degree(ctx):
    return _triples_over_balls(ctx, 3, lambda v: ctx.interior(v, 3),
                               lambda v, b: ctx.kappa(b), upper=lambda v, b: _kappa_upper(ctx, b))


def _local_kappa(ctx, p):
    return _balls_two_connected(ctx, 3) or _local_kappa_degree(ctx)


def _local_kappa_single_degree(ctx):
    deg = ctx.deg
    for v in iter_bits(ctx.centers):
        b = ctx.ball(v, 3)
        size = popcount(b)
        inner = ctx.interior(v, 3)
        if not inner:
            continue
        dmin = min(deg[u] for u in iter_bits(inner))
        if 3 * dmin >= size + _kappa_upper(ctx, b):
            continue
        k = ctx.kappa(b)
        for u in iter_bits(inner):
            if 3 * deg[u] < size + k:
                return _w("vertex", v, [u], deg[u], (size + k) / 3, radius=3, kappa=k)
    return None


def _local_kappa_single(ctx, p):
    return _balls_two_connected(ctx, 3) or _local_kappa_single_degree(ctx)


def _odd_pairs(ctx, u: int, max_r: int) -> Iterator[tuple[int, int]]:
    for d in range(3, max_r + 1, 2):
        for v in iter_bits(ctx.sphere(u, d)):
            yield v, d


def _moon_moser(ctx, p):
    n = ctx.n // 2
    deg = ctx.deg
    for u in range(ctx.n):
        for d, layer in enumerate(ctx.layers(u)):
            if d % 2 == 0 or d == 1:
                continue
            for v in iter_bits(layer & ~((2 << u) - 1)):
                if deg[u] + deg[v] <= n:
                    return _w("pair", None, [u, v], deg[u] + deg[v], n, distance=d)
    return None


def _moon_moser_ball6(ctx, p):
    deg = ctx.deg
    for u in iter_bits(ctx.centers):
        rhs = 1 + popcount(ctx.sphere(u, 2)) + popcount(ctx.sphere(u, 4)) + popcount(ctx.sphere(u, 6))
        for v, d in _odd_pairs(ctx, u, 5):
            if deg[u] + deg[v] <= rhs:
                return _w("pair", u, [u, v], deg[u] + deg[v], rhs, distance=d, radius=6)
    return None


def _local_mm(ctx, p):
    deg, rows = ctx.deg, ctx.rows
    for u in iter_bits(ctx.centers):
        n2 = ctx.sphere(u, 2)
        for v in iter_bits(ctx.sphere(u, 3)):
            rhs = 1 + popcount(n2 | rows[v])
            if deg[u] + deg[v] <= rhs:
                return _w("pair", u, [u, v], deg[u] + deg[v], rhs, distance=3)
    return None


def _infinite_ce(ctx, p):
    r = p.get("r", 1)
    for u in iter_bits(ctx.centers):
        k = ctx.kappa(ctx.ball(u, r))
        a = ctx.alpha(ctx.ball(u, r + 1))
        if k < a:
            return _w("kappa-alpha", u, [u], k, a, radius=r)
    return None


def _infinite_jung(ctx, p):
    return _balls_two_connected(ctx, 2) or _paths_uxv(ctx, lambda u, x, v: popcount(ctx.ball(x, 2)) - 1)


def _local_dirac_m2(ctx, p):
    return _local_dirac(2)(ctx, p)


def _ball3_2connected(ctx, p):
    return _balls_two_connected(ctx, 3)


def _two_connected(ctx, p):
    return _global_two_connected(ctx)


# -- catalog ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    id: str
    evaluate: Callable[[GraphContext, dict], dict | None]
    scope: tuple[str, ...]
    conclusion: str | None
    summary: str
    sufficient: bool = True
    window_reach: int | None = None  # radius a center's ball needs inside a window

    @property
    def window_only(self) -> bool:
        return "window" in self.scope


BASE = ("n>=3",)
LOCAL = ("n>=3", "connected")
REG = ("n>=3", "connected", "regular>=2")
MM = ("connected", "balanced-bipartite", "n>=4")
WINDOW = ("window",)

_ENTRIES = [
    Condition("dirac", _dirac, BASE, HAMILTONIAN, "d(u) >= n/2 for all u"),
    Condition("ore", _ore, BASE, HAMILTONIAN, "d(u)+d(v) >= n for nonadjacent u, v"),
    Condition("chvatal_erdos", _chvatal_erdos, BASE, HAMILTONIAN, "kappa(G) >= alpha(G)"),
    Condition("oberly_sumner", _oberly_sumner, BASE, HAMILTONIAN, "connected, locally connected, claw-free"),
    Condition("local_ore_L0", _local_ore_l0, LOCAL, HAMILTONIAN,
              "d(u)+d(v) >= |N(u) u N(v) u N(x)| for paths uxv, uv not an edge"),
    Condition("dirac_ball2_lifted", _lifted_dirac(2), LOCAL, HAMILTONIAN, "every radius-2 ball is a Dirac graph"),
    Condition("ore_ball2_lifted", _lifted_ore(2), LOCAL, HAMILTONIAN, "every radius-2 ball is an Ore graph"),
    Condition("ce_ball_sqrt", _ce_ball_sqrt, LOCAL, HAMILTONIAN,
              "kappa(G_r(u)) >= alpha(G_r(u)) with r = floor(sqrt(2n-3))"),
    Condition("local_dirac_M4", _local_dirac(4), LOCAL, HAMILTONIAN, "d(u) >= |M_4(u)|/2"),
    Condition("local_ore_M3_interior", _local_ore_m3_interior, LOCAL, HAMILTONIAN,
              "d(u)+d(v) >= |M_3(x)| for nonadjacent interior u, v of G_3(x)"),
    Condition("local_dirac_M3", _local_dirac(3), LOCAL, HAMILTONIAN, "d(u) >= |M_3(u)|/2"),
    Condition("ore_ball1_lifted", _lifted_ore(1), LOCAL, HAMILTONIAN, "every radius-1 ball is an Ore graph"),
    Condition("local_ore_M2", _local_ore_m2, LOCAL, HAMILTONIAN, "d(u)+d(v) >= |M_2(x)| for paths uxv, uv not an edge"),
    Condition("local_ore_regular", _local_ore_regular, REG, HAMILTONIAN, "k-regular and 2k >= |M_2(x)|"),
    Condition("sphere2_below_degree", _sphere2_below_degree, REG, HAMILTONIAN, "k-regular and |N_2(x)| < k"),
    Condition("bondy_global", _bondy_global, BASE, DOMINATING,
              "2-connected, d(x)+d(y)+d(z) >= n+2 for independent triples"),
    Condition("bondy_ball4", _bondy_ball4, LOCAL, DOMINATING,
              "radius-4 balls 2-connected, triple sum >= |M_4(v)|+2 over independent interior triples of G_4(v)"),
    Condition("local_bondy", _local_bondy, LOCAL, DOMINATING,
              "radius-3 balls 2-connected, triple sum >= |M_3(v)|+2 over independent triples of G_2(v)"),
    Condition("local_bondy_general", _local_bondy_general, LOCAL, DOMINATING,
              "local_bondy degree part plus the cut-vertex clause for non-2-connected radius-3 balls"),
    Condition("haggkvist_nicoghossian", _haggkvist, BASE, HAMILTONIAN, "2-connected, d(u) >= (n+kappa)/3"),
    Condition("bauer", _bauer, BASE, HAMILTONIAN, "2-connected, triple sum >= n+kappa"),
    Condition("local_kappa", _local_kappa, LOCAL, HAMILTONIAN,
              "radius-3 balls 2-connected, triple sum >= |M_3(v)|+kappa(G_3(v)) over independent interior triples"),
    Condition("local_kappa_single", _local_kappa_single, LOCAL, HAMILTONIAN,
              "radius-3 balls 2-connected, d(u) >= (|M_3(v)|+kappa(G_3(v)))/3 for interior u"),
    Condition("moon_moser", _moon_moser, MM, HAMILTONIAN,
              "balanced bipartite, d(u)+d(v) > n/2 for nonadjacent pairs at odd distance"),
    Condition("moon_moser_ball6", _moon_moser_ball6, MM, HAMILTONIAN,
              "d(u)+d(v) > 1+|N_2(u)|+|N_4(u)|+|N_6(u)| for v at odd distance > 1 in G_6(u)"),
    Condition("local_mm", _local_mm, MM, HAMILTONIAN, "d(u)+d(v) > 1+|N_2(u) u N(v)| whenever d(u,v) = 3"),
    Condition("infinite_ce", _infinite_ce, WINDOW, CURVE, "kappa(G_r(u)) >= alpha(G_{r+1}(u))", window_reach=2),
    Condition("infinite_jung", _infinite_jung, WINDOW, CURVE,
              "radius-2 balls 2-connected, d(u)+d(v) >= |M_2(x)|-1 for paths uxv", window_reach=2),
    Condition("infinite_kappa", _local_kappa, WINDOW, CURVE,
              "local_kappa evaluated on a window", window_reach=3),
    Condition("infinite_kappa_single", _local_kappa_single, WINDOW, CURVE,
              "local_kappa_single evaluated on a window", window_reach=3),
    # search helpers, not sufficient for anything
    Condition("local_dirac_M2", _local_dirac_m2, LOCAL, None, "d(u) >= |M_2(u)|/2", sufficient=False),
    Condition("ball3_2connected", _ball3_2connected, LOCAL, None, "every radius-3 ball is 2-connected",
              sufficient=False),
    Condition("two_connected", _two_connected, BASE, None, "G is 2-connected", sufficient=False),
]

CATALOG: dict[str, Condition] = {c.id: c for c in _ENTRIES}
FINITE_SUFFICIENT = tuple(c.id for c in _ENTRIES if c.sufficient and not c.window_only)


def get_condition(cid: str) -> Condition:
    try:
        return CATALOG[cid]
    except KeyError:
        raise UnknownCondition(f"unknown condition {cid!r}") from None


def guaranteed_conclusion(cid: str) -> str | None:
    """The property a passing graph is guaranteed to have (``None`` for search helpers)."""
    return get_condition(cid).conclusion


def scope_failure(ctx: GraphContext, cond: Condition) -> str | None:
    for tag in cond.scope:
        if tag == "n>=3" and ctx.n < 3:
            return "needs at least 3 vertices"
        if tag == "n>=4" and ctx.n < 4:
            return "needs at least 4 vertices"
        if tag == "connected" and not ctx.connected:
            return "graph is not connected"
        if tag == "regular>=2":
            k = ctx.regular_degree()
            if k is None or k < 2:
                return "graph is not k-regular with k >= 2"
        if tag == "balanced-bipartite":
            bp = ctx.bipartition
            if bp is None:
                return "graph is not bipartite"
            if not bp.balanced:
                return "bipartition is not balanced"
        if tag == "window":
            return "window-only condition; evaluate through the infinite module"
    return None


def evaluate(ctx: GraphContext, cid: str, params: dict | None = None, scope: bool = True) -> ConditionReport:
    cond = get_condition(cid)
    if scope:
        why = scope_failure(ctx, cond)
        if why is not None:
            return ConditionReport(cid, NA, reason=why)
    w = cond.evaluate(ctx, params or {})
    return ConditionReport(cid, PASS if w is None else FAIL, w)


def check_condition(g: Graph, cid: str, params: dict | None = None, scope: bool = True,
                    ctx: GraphContext | None = None) -> ConditionReport:
    """Evaluate one catalog condition on ``g``.

    ``scope=False`` skips the applicability gate and evaluates the bare
    predicate, e.g. the degree part of ``local_mm`` on an unbalanced graph.
    """
    return evaluate(ctx or GraphContext(g), cid, params, scope)


LIFTABLE = ("dirac", "ore", "chvatal_erdos")


def lift_to_balls(g: Graph, base: str, r: int) -> ConditionReport:
    """Apply a whole-graph condition to every radius-``r`` ball as a standalone graph."""
    if base not in LIFTABLE:
        raise ValueError(f"{base!r} is not a whole-graph condition; expected one of {LIFTABLE}")
    cid = f"{base}@ball{r}"
    ctx = GraphContext(g)
    if g.n < 3:
        return ConditionReport(cid, NA, reason="needs at least 3 vertices")
    if not ctx.connected:
        return ConditionReport(cid, NA, reason="graph is not connected")
    for u in range(g.n):
        view = ball_view(g, u, r)
        rep = check_condition(view.subgraph, base, scope=False)
        if not rep.passed:
            w = dict(rep.witness)
            w["center"] = u
            w["vertices"] = [view.mapping[v] for v in w["vertices"]]
            w["radius"] = r
            return ConditionReport(cid, FAIL, w)
    return ConditionReport(cid, PASS)


# -- independent witness re-check ------------------------------------------------------


def recheck_witness(g: Graph, report: ConditionReport, params: dict | None = None) -> bool:
    """Re-derive a failing report's violation from scratch with the metrics API.

    Returns ``True`` when the witness is a genuine violation of the
    condition. Used by tests and by the harness before anything is reported.
    """
    if report.verdict != FAIL or report.witness is None:
        return False
    w = report.witness
    cid = report.id
    kind = w["kind"]
    vs = w["vertices"]
    c = w["center"]
    deg = g.degrees()

    def M(u, r):
        return set(ball_view(g, u, r).mapping)

    def N(u, r):
        return sphere(g, u, r)

    def indep(tup):
        return all(not g.has_edge(a, b) for i, a in enumerate(tup) for b in tup[i + 1:])

    def interior(u, r, v):
        return v in ball_view(g, u, r).interior

    def kappa_of(S):
        sub, _ = induced_subgraph(g, S)
        return vertex_connectivity(sub) if sub.n >= 2 else 0

    def alpha_of(S):
        return independence_number(induced_subgraph(g, S)[0])

    def two_conn(S):
        return is_two_connected_mask(g.rows, sum(1 << v for v in S))

    if kind == "ball-not-2-connected":
        return not two_conn(M(c, w["radius"]))
    if kind == "not-2-connected":
        return not two_conn(range(g.n))
    if kind == "disconnected":
        return len(set(distances_from(g, 0)) & {-1}) > 0
    if kind == "not-locally-connected":
        return not is_connected_mask(g.rows, g.rows[vs[0]])
    if kind == "claw":
        v, a, b, cc = vs
        return all(g.has_edge(v, x) for x in (a, b, cc)) and indep((a, b, cc))
    if kind == "cut-vertex-clause":
        u = vs[0]
        B = M(c, 3)
        if u not in B or two_conn(B) or u not in cut_vertices_mask(g.rows, sum(1 << x for x in B)):
            return False
        if len(vs) == 1:
            return u not in N(c, 2)
        a, b = vs[1], vs[2]
        rest = sum(1 << x for x in B - {u})
        if component_mask(g.rows, a, rest) >> b & 1:
            return False
        n4 = N(c, 4)
        return a in N(c, 3) and b in N(c, 3) and not (set(g.neighbors(a)) & set(g.neighbors(b)) & n4)

    if cid in ("dirac",):
        return 2 * deg[vs[0]] < g.n
    if cid in ("ore",):
        u, v = vs
        return not g.has_edge(u, v) and deg[u] + deg[v] < g.n
    if cid == "chvatal_erdos":
        return vertex_connectivity(g) < independence_number(g)
    if cid in ("local_ore_L0", "local_ore_M2", "infinite_jung"):
        u, x, v = vs
        if not (g.has_edge(u, x) and g.has_edge(x, v)) or g.has_edge(u, v):
            return False
        if cid == "local_ore_L0":
            rhs = len(set(g.neighbors(u)) | set(g.neighbors(v)) | set(g.neighbors(x)))
        else:
            rhs = len(M(x, 2)) - (1 if cid == "infinite_jung" else 0)
        return deg[u] + deg[v] < rhs
    if cid in ("dirac_ball2_lifted", "ore_ball2_lifted", "ore_ball1_lifted"):
        view = ball_view(g, c, w["radius"])
        sub = view.subgraph
        loc = [view.local_id(v) for v in vs]
        if cid.startswith("dirac"):
            return 2 * sub.degree(loc[0]) < sub.n
        return not sub.has_edge(*loc) and sub.degree(loc[0]) + sub.degree(loc[1]) < sub.n
    if cid == "ce_ball_sqrt":
        S = M(c, ce_radius(g.n))
        return kappa_of(S) < alpha_of(S)
    if cid in ("local_dirac_M4", "local_dirac_M3", "local_dirac_M2"):
        r = int(cid[-1])
        return 2 * deg[vs[0]] < len(M(vs[0], r))
    if cid == "local_ore_M3_interior":
        u, v = vs
        return (not g.has_edge(u, v) and interior(c, 3, u) and interior(c, 3, v)
                and deg[u] + deg[v] < len(M(c, 3)))
    if cid == "local_ore_regular":
        return 2 * deg[c] < len(M(c, 2))
    if cid == "sphere2_below_degree":
        return len(N(c, 2)) >= deg[c]
    if kind == "triple":
        if not indep(tuple(vs)) or len(set(vs)) != 3:
            return False
        s = sum(deg[v] for v in vs)
        if cid == "bondy_global":
            return s < g.n + 2
        if cid == "bauer":
            return s < g.n + vertex_connectivity(g)
        if cid == "bondy_ball4":
            return all(interior(c, 4, v) for v in vs) and s < len(M(c, 4)) + 2
        if cid in ("local_bondy", "local_bondy_general"):
            return all(v in M(c, 2) for v in vs) and s < len(M(c, 3)) + 2
        if cid in ("local_kappa", "infinite_kappa"):
            B = M(c, 3)
            return all(interior(c, 3, v) for v in vs) and s < len(B) + kappa_of(B)
        return False
    if cid == "haggkvist_nicoghossian":
        return 3 * deg[vs[0]] < g.n + vertex_connectivity(g)
    if cid in ("local_kappa_single", "infinite_kappa_single"):
        B = M(c, 3)
        return interior(c, 3, vs[0]) and 3 * deg[vs[0]] < len(B) + kappa_of(B)
    if cid == "moon_moser":
        u, v = vs
        d = distances_from(g, u)[v]
        return d % 2 == 1 and d > 1 and deg[u] + deg[v] <= g.n // 2
    if cid == "moon_moser_ball6":
        u, v = vs
        d = distances_from(g, u)[v]
        rhs = 1 + len(N(u, 2)) + len(N(u, 4)) + len(N(u, 6))
        return d in (3, 5) and deg[u] + deg[v] <= rhs
    if cid == "local_mm":
        u, v = vs
        return distances_from(g, u)[v] == 3 and deg[u] + deg[v] <= 1 + len(N(u, 2) | set(g.neighbors(v)))
    if cid == "infinite_ce":
        r = (params or {}).get("r", 1)
        return kappa_of(M(c, r)) < alpha_of(M(c, r + 1))
    return False
