"""Layered graph families used as fixtures and separation examples.

A layered graph has consecutive vertex layers ``V_0, ..., V_k``. In the clique
convention two vertices are adjacent iff both lie in ``V_i u V_{i+1}`` for
some consecutive pair, so each layer is a clique joined completely to its
neighbours. In the bipartite convention only vertices of consecutive layers
are adjacent. Vertices are numbered layer by layer in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphInputError, from_edge_list


@dataclass(frozen=True)
class LayeredSpec:
    sizes: tuple[int, ...]
    wrap: bool = False
    cliques: bool = True

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return out

    @property
    def n(self) -> int:
        return sum(self.sizes)


def layer_of(spec: LayeredSpec) -> list[int]:
    """Layer index of every vertex."""
    return [i for i, s in enumerate(spec.sizes) for _ in range(s)]


def layered_graph(spec: LayeredSpec) -> Graph:
    sizes = spec.sizes
    if not sizes or any(not isinstance(s, int) or s < 1 for s in sizes):
        raise GraphInputError("layer sizes must be positive integers")
    k = len(sizes)
    if spec.wrap and k < 3:
        raise GraphInputError("a wrapped layered graph needs at least 3 layers")
    off = spec.offsets()
    layers = [range(off[i], off[i] + sizes[i]) for i in range(k)]
    edges = []
    if spec.cliques:
        for L in layers:
            edges += [(a, b) for a in L for b in L if a < b]
    pairs = [(i, i + 1) for i in range(k - 1)]
    if spec.wrap:
        pairs.append((k - 1, 0))
    for i, j in pairs:
        edges += [(a, b) for a in layers[i] for b in layers[j]]
    return from_edge_list(spec.n, edges)


def ce_tight_H_spec(n: int) -> LayeredSpec:
    if n < 3:
        raise GraphInputError("ce_tight_H needs n >= 3")
    return LayeredSpec((n,) * (2 * n - 1) + (n - 1,))


def g_pn_spec(p: int, n: int) -> LayeredSpec:
    if p < 2 or n < 2:
        raise GraphInputError("g_pn needs p >= 2 and n >= 2")
    return LayeredSpec((p,) * (2 * n), wrap=True)


def gn_dirac_spec(n: int) -> LayeredSpec:
    if n < 2:
        raise GraphInputError("gn_dirac needs n >= 2")
    return LayeredSpec((n, 3 * n, n + 1, n + 1, 3 * n, n))


def mm_diam6_spec(n: int) -> LayeredSpec:
    if n < 2:
        raise GraphInputError("mm_diam6 needs n >= 2")
    return LayeredSpec((1, n - 1, n, n, n, n - 1, 1), cliques=False)


def ce_tight_H(n: int) -> Graph:
    """``2n^2-1`` vertices with kappa = alpha = n and diameter ``2n-1``."""
    return layered_graph(ce_tight_H_spec(n))


def g_pn(p: int, n: int) -> Graph:
    """``2n`` cyclic layers of size ``p``: (3p-1)-regular with diameter ``n``."""
    return layered_graph(g_pn_spec(p, n))


def gn_dirac(n: int) -> Graph:
    return layered_graph(gn_dirac_spec(n))


def mm_diam6(n: int) -> Graph:
    """Bipartite, ``5n`` vertices, diameter 6. Parts have sizes ``2n+2`` and ``3n-2``."""
    return layered_graph(mm_diam6_spec(n))


FAMILIES = {
    "ce_tight_H": (ce_tight_H, ce_tight_H_spec, ("n",)),
    "g_pn": (g_pn, g_pn_spec, ("p", "n")),
    "gn_dirac": (gn_dirac, gn_dirac_spec, ("n",)),
    "mm_diam6": (mm_diam6, mm_diam6_spec, ("n",)),
}


def named_family(name: str, *params: int) -> Graph:
    try:
        build, _, names = FAMILIES[name]
    except KeyError:
        raise GraphInputError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None
    if len(params) != len(names):
        raise GraphInputError(f"{name} takes parameters ({', '.join(names)})")
    return build(*params)
