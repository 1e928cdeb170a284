"""Immutable finite simple graphs stored as adjacency bit rows.

Vertices are dense integers ``0..n-1``. Row ``rows[u]`` is an ``int`` whose
bit ``v`` is set iff ``uv`` is an edge. Python integers are unbounded, so the
same representation serves every ``n``; the hot paths in :mod:`metrics`,
:mod:`conditions` and :mod:`oracles` work directly on these rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graph construction input."""


class Graph6Error(GraphInputError):
    """Raised for a malformed graph6 record."""


GRAPH6_HEADER = ">>graph6<<"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Construct through :func:`from_edge_list`, :func:`from_rows` or
    :func:`parse_graph6`; the constructors validate symmetry and
    loop-freedom.
    """

    n: int
    rows: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, u: int) -> int:
        return popcount(self.rows[u])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency(self) -> list[set[int]]:
        return [set(iter_bits(r)) for r in self.rows]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1


def _check_vertex(n: int, v: int) -> None:
    if not isinstance(v, int) or v < 0 or v >= n:
        raise GraphInputError(f"vertex {v!r} out of range for n={n}")


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphInputError("vertex count must be non-negative")
    rows = [0] * n
    for e in edges:
        u, v = e
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    """Build a graph from bit rows, validating symmetry and loops."""
    n = len(rows)
    full = (1 << n) - 1
    for u, r in enumerate(rows):
        if r & ~full:
            raise GraphInputError(f"row {u} references a vertex >= n")
        if r >> u & 1:
            raise GraphInputError(f"self-loop at vertex {u}")
        for v in iter_bits(r):
            if not rows[v] >> u & 1:
                raise GraphInputError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def wheel_graph(rim: int) -> Graph:
    """Hub ``0`` joined to a rim cycle on ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return from_edge_list(rim + 1, edges)


# -- graph6 -----------------------------------------------------------------


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit length prefix")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 18-bit length prefix")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    if n < 63:
        raise Graph6Error("18-bit length prefix used for n < 63")
    return n, 4


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is tolerated)."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 record") from exc
    for c in data:
        if c < 63 or c > 126:
            raise Graph6Error(f"character {chr(c)!r} outside graph6 range")
    n, offset = _decode_size(data)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != nchars:
        raise Graph6Error(f"expected {nchars} data characters for n={n}, got {len(body)}")
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    pad = nchars * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record without header or newline."""
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    count = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = 0
                count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 records, skipping blank lines and a header."""
    for raw in lines:
        line = raw.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        yield parse_graph6(line)


# -- edge-list text ---------------------------------------------------------


def parse_edge_list_text(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format."""
    tokens = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    tokens = [t for t in tokens if t]
    if not tokens:
        raise GraphInputError("empty edge-list input")
    try:
        header = [int(x) for x in tokens[0]]
        if len(header) != 2:
            raise GraphInputError("edge-list header must be 'n m'")
        n, m = header
        edges = []
        for t in tokens[1:]:
            if len(t) != 2:
                raise GraphInputError(f"bad edge line {' '.join(t)!r}")
            edges.append((int(t[0]), int(t[1])))
    except ValueError as exc:
        if isinstance(exc, GraphInputError):
            raise
        raise GraphInputError(f"non-integer token in edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# -- structure ----------------------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``; returns it with the new-id -> old-id map."""
    old = sorted(set(vertices))
    for v in old:
        _check_vertex(g.n, v)
    index = {v: i for i, v in enumerate(old)}
    keep = mask_of(old)
    rows = []
    for v in old:
        r = 0
        for w in iter_bits(g.rows[v] & keep):
            r |= 1 << index[w]
        rows.append(r)
    return Graph(len(old), tuple(rows)), tuple(old)


def component_mask(rows: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside ``allowed`` (bit rows BFS)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return component_mask(g.rows, 0, g.all_mask) == g.all_mask


def components(g: Graph) -> list[list[int]]:
    left = g.all_mask
    out = []
    while left:
        s = (left & -left).bit_length() - 1
        comp = component_mask(g.rows, s, left)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


@dataclass(frozen=True)
class Bipartition:
    parts: tuple[frozenset[int], frozenset[int]]

    @property
    def balanced(self) -> bool:
        return len(self.parts[0]) == len(self.parts[1])


def two_coloring(rows: Sequence[int]) -> list[int] | None:
    """Colors 0/1 per vertex, or ``None`` if an odd cycle exists."""
    n = len(rows)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(rows[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def bipartition(g: Graph) -> Bipartition | None:
    """A 2-coloring of ``g``; ``None`` means "not bipartite".

    Each component is colored from its smallest vertex, so connected graphs
    get the unique bipartition with vertex 0 in the first part.
    """
    color = two_coloring(g.rows)
    if color is None:
        return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition((a, b))
