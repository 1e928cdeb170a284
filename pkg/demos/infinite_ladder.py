"""Probe a two-way infinite layered graph through finite windows.

The layered graph with p vertices per layer (layers indexed by all integers,
consecutive layers completely joined) satisfies the windowed kappa condition
for p >= 3 and fails it for p = 2. For p = 3 the curve probe finds, for random
finite sets S, a finite cycle through S inside the window of radius r + 12.

    python3 demos/infinite_ladder.py
"""

from __future__ import annotations

from localham.infinite import (LayeredOracle, curve_probe, random_layered_sets, validate_oracle_cycle,
                               verify_window_witness, windowed_condition_check)

if __name__ == "__main__":
    for p in (2, 3):
        o = LayeredOracle(p)
        rep = windowed_condition_check(o, o.root, 9, "infinite_kappa")
        line = f"p={p}: infinite_kappa {rep.verdict}"
        if rep.witness:
            w = rep.witness
            line += f" ({w['kind']} {w['lhs']} < {w['rhs']}, confirmed: {verify_window_witness(o, rep)})"
        print(line)
    o = LayeredOracle(3)
    for S in random_layered_sets(o, 5, seed=7):
        res = curve_probe(o, S)
        layers = sorted({o.layer(v) for v in S})
        print(f"  S in layers {layers}: cycle of length {len(res.cycle)} in a window of {res.window_size} "
              f"vertices, valid={validate_oracle_cycle(o, res.cycle, S)}")
