"""Grow a Hamilton cycle from a triangle by local absorb/extend steps.

Every step changes the cycle only inside the radius-12 ball around the
vertex being handled.

    python3 demos/grow_cycle.py
"""

from __future__ import annotations

from localham import check_condition
from localham.constructive import grow_to_hamiltonian, mm_close_to_cycle, OrientedPath
from localham.families import g_pn, mm_diam6
from localham.oracles import longest_path

if __name__ == "__main__":
    g = g_pn(2, 4)
    print("g_pn(2,4) local_kappa:", check_condition(g, "local_kappa").verdict)
    start = next((a, b, c) for a in range(g.n) for b in g.neighbors(a) for c in g.neighbors(b)
                 if a < b < c and g.has_edge(a, c))
    C, steps = grow_to_hamiltonian(g, start)
    for st in steps:
        print(f"  {st.op:6s} at {st.vertex:2d}: {len(st.before):2d} -> {len(st.after):2d} vertices")
    print("hamilton cycle:", C.vertices)

    h = mm_diam6(4)
    P = longest_path(h, engine="backtrack")
    cyc, rotations = mm_close_to_cycle(h, OrientedPath(P))
    print(f"mm_diam6(4): longest path on {len(P)} vertices closed into a "
          f"{cyc.length}-cycle after {rotations} rotations")
