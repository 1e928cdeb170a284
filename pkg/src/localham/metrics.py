"""Distances, spheres, balls, connectivity and independence.

Every function has a ``Graph``-level form and, where the condition checks need
it, a lower-level form working on bit rows restricted to a vertex mask. The
mask forms let ball quantities (``kappa(G_r(u))`` and friends) be computed
without materialising the induced subgraph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphInputError, induced_subgraph, iter_bits, popcount, component_mask

UNREACHABLE = -1


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise GraphInputError(f"vertex {u} out of range for n={g.n}")


# -- distances and balls ------------------------------------------------------


def sphere_layers(rows: Sequence[int], u: int, allowed: int | None = None) -> list[int]:
    """Masks ``[N_0(u), N_1(u), ...]`` up to the last nonempty sphere."""
    if allowed is None:
        allowed = (1 << len(rows)) - 1
    seen = 1 << u
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def distances_from(g: Graph, u: int) -> list[int]:
    """BFS distances from ``u``; unreachable vertices get ``UNREACHABLE``."""
    _check_vertex(g, u)
    dist = [UNREACHABLE] * g.n
    for d, layer in enumerate(sphere_layers(g.rows, u)):
        for v in iter_bits(layer):
            dist[v] = d
    return dist


def sphere(g: Graph, u: int, r: int) -> set[int]:
    """``N_r(u)``: vertices at distance exactly ``r``."""
    _check_vertex(g, u)
    layers = sphere_layers(g.rows, u)
    return set(iter_bits(layers[r])) if r < len(layers) else set()


def ball_mask(rows: Sequence[int], u: int, r: int) -> int:
    m = 0
    for layer in sphere_layers(rows, u)[: r + 1]:
        m |= layer
    return m


def interior_mask(rows: Sequence[int], ball: int) -> int:
    """Vertices of ``ball`` whose whole neighbourhood lies in ``ball``."""
    out = 0
    for v in iter_bits(ball):
        if rows[v] & ~ball == 0:
            out |= 1 << v
    return out


@dataclass(frozen=True)
class BallView:
    """The ball ``G_r(center)`` as a standalone graph plus its embedding."""

    center: int
    radius: int
    subgraph: Graph
    mapping: tuple[int, ...]
    interior: frozenset[int]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def local_id(self, v: int) -> int:
        return self.mapping.index(v)


def ball(g: Graph, u: int, r: int) -> BallView:
    _check_vertex(g, u)
    if r < 0:
        raise GraphInputError("radius must be non-negative")
    m = ball_mask(g.rows, u, r)
    sub, mapping = induced_subgraph(g, iter_bits(m))
    interior = frozenset(iter_bits(interior_mask(g.rows, m)))
    return BallView(u, r, sub, mapping, interior)


def eccentricity_layers(rows: Sequence[int]) -> list[list[int]]:
    return [sphere_layers(rows, u) for u in range(len(rows))]


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise GraphInputError("diameter of the empty graph is undefined")
    best = 0
    for u in range(g.n):
        layers = sphere_layers(g.rows, u)
        if sum(popcount(x) for x in layers) != g.n:
            raise GraphInputError("diameter of a disconnected graph is undefined")
        best = max(best, len(layers) - 1)
    return best


# -- connectivity -------------------------------------------------------------


def is_connected_mask(rows: Sequence[int], mask: int) -> bool:
    if mask == 0:
        return True
    s = (mask & -mask).bit_length() - 1
    return component_mask(rows, s, mask) == mask


def _component_count(rows: Sequence[int], mask: int) -> int:
    count = 0
    while mask:
        s = (mask & -mask).bit_length() - 1
        mask &= ~component_mask(rows, s, mask)
        count += 1
    return count


def cut_vertices_mask(rows: Sequence[int], mask: int) -> list[int]:
    """Vertices whose removal increases the number of components of ``G[mask]``."""
    base = _component_count(rows, mask)
    out = []
    for v in iter_bits(mask):
        rest = mask & ~(1 << v)
        if _component_count(rows, rest) > base - (0 if rows[v] & mask else 1):
            out.append(v)
    return out


def is_two_connected_mask(rows: Sequence[int], mask: int) -> bool:
    if popcount(mask) < 3 or not is_connected_mask(rows, mask):
        return False
    for v in iter_bits(mask):
        if not is_connected_mask(rows, mask & ~(1 << v)):
            return False
    return True


def is_two_connected(g: Graph) -> bool:
    return is_two_connected_mask(g.rows, g.all_mask)


def biconnected_blocks(rows: Sequence[int], mask: int) -> list[int]:
    """Vertex masks of the blocks (maximal 2-connected pieces or bridges)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[int] = []
    counter = 0
    for root in iter_bits(mask):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(list(iter_bits(rows[root] & mask))))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(list(iter_bits(rows[w] & mask)))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    low[v] = min(low[v], index[w])
                    edge_stack.append((v, w))
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= index[p]:
                    block = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        block |= (1 << a) | (1 << b)
                        if (a, b) == (p, v):
                            break
                    blocks.append(block)
        if popcount(component_mask(rows, root, mask)) == 1:
            blocks.append(1 << root)
    return blocks


def local_vertex_connectivity(rows: Sequence[int], s: int, t: int, allowed: int,
                              limit: int | None = None) -> int:
    """Maximum number of internally disjoint ``s``-``t`` paths inside ``allowed``.

    Unit-capacity max-flow on the vertex-split graph; ``s`` and ``t`` must be
    nonadjacent. Stops early once ``limit`` paths are found.
    """
    flow: set[tuple[int, int]] = set()
    used = 0
    found = 0
    # node key: 2*v for v_in, 2*v+1 for v_out
    src, dst = 2 * s + 1, 2 * t
    while limit is None or found < limit:
        pred = {src: None}
        queue = deque([src])
        while queue and dst not in pred:
            node = queue.popleft()
            v, out = node >> 1, node & 1
            if out:
                for w in iter_bits(rows[v] & allowed):
                    nxt = 2 * w
                    if nxt not in pred and (v, w) not in flow:
                        pred[nxt] = node
                        queue.append(nxt)
                if used >> v & 1:
                    nxt = 2 * v
                    if nxt not in pred:
                        pred[nxt] = node
                        queue.append(nxt)
            else:
                if v != s and v != t and not used >> v & 1:
                    nxt = 2 * v + 1
                    if nxt not in pred:
                        pred[nxt] = node
                        queue.append(nxt)
                for w in iter_bits(rows[v] & allowed):
                    nxt = 2 * w + 1
                    if nxt not in pred and (w, v) in flow:
                        pred[nxt] = node
                        queue.append(nxt)
        if dst not in pred:
            break
        node = dst
        while pred[node] is not None:
            prev = pred[node]
            a, b = prev >> 1, node >> 1
            if a == b:
                if prev & 1 == 0:
                    used |= 1 << a
                else:
                    used &= ~(1 << a)
            elif prev & 1:
                flow.add((a, b))
            else:
                flow.discard((b, a))
            node = prev
        found += 1
    return found


def vertex_connectivity_mask(rows: Sequence[int], mask: int) -> int:
    """``kappa`` of the subgraph induced on ``mask`` (Esfahanian-Hakimi scheme)."""
    k = popcount(mask)
    if k <= 1:
        return 0
    if not is_connected_mask(rows, mask):
        return 0
    degs = {v: popcount(rows[v] & mask) for v in iter_bits(mask)}
    best = min(degs.values())
    if best == k - 1:
        return k - 1
    v = min(degs, key=lambda x: (degs[x], x))
    nv = rows[v] & mask
    for w in iter_bits(mask & ~nv & ~(1 << v)):
        best = min(best, local_vertex_connectivity(rows, v, w, mask, best))
        if best == 0:
            return 0
    nbrs = list(iter_bits(nv))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not rows[x] >> y & 1:
                best = min(best, local_vertex_connectivity(rows, x, y, mask, best))
    return best


def vertex_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise GraphInputError("vertex connectivity needs at least two vertices")
    return vertex_connectivity_mask(g.rows, g.all_mask)


# -- independence -------------------------------------------------------------


def max_independent_set_mask(rows: Sequence[int], mask: int) -> int:
    """A maximum independent set of the subgraph on ``mask``, as a mask."""
    best = [0, 0]  # size, set

    def greedy(m: int) -> int:
        chosen = 0
        while m:
            v = min(iter_bits(m), key=lambda x: popcount(rows[x] & m))
            chosen |= 1 << v
            m &= ~(rows[v] | (1 << v))
        return chosen

    g0 = greedy(mask)
    best[0], best[1] = popcount(g0), g0

    def search(m: int, chosen: int, size: int) -> None:
        if size + popcount(m) <= best[0]:
            return
        if not m:
            best[0], best[1] = size, chosen
            return
        v = -1
        dv = 1 << 30
        for x in iter_bits(m):
            d = popcount(rows[x] & m)
            if d < dv:
                v, dv = x, d
                if d <= 1:
                    break
        if dv == 0:
            search(m & ~(1 << v), chosen | (1 << v), size + 1)
            return
        for w in iter_bits((rows[v] & m) | (1 << v)):
            search(m & ~(rows[w] | (1 << w)), chosen | (1 << w), size + 1)

    search(mask, 0, 0)
    return best[1]


def independence_number_mask(rows: Sequence[int], mask: int) -> int:
    return popcount(max_independent_set_mask(rows, mask))


def independence_number(g: Graph) -> int:
    return independence_number_mask(g.rows, g.all_mask)


# -- local structure ------------------------------------------------------------


def claw_at(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced ``K_{1,3}`` as ``(center, a, b, c)``, if any."""
    rows = g.rows
    for v in range(g.n):
        for a in iter_bits(rows[v]):
            free_a = rows[v] & ~rows[a] & ~((1 << (a + 1)) - 1)
            for b in iter_bits(free_a):
                for c in iter_bits(free_a & ~rows[b] & ~((1 << (b + 1)) - 1)):
                    return (v, a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    return claw_at(g) is None


def is_locally_connected(g: Graph) -> bool:
    """Every neighbourhood induces a connected graph (empty/singleton count)."""
    return all(is_connected_mask(g.rows, g.rows[v]) for v in range(g.n))
