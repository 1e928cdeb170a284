"""Check every finite sufficient condition on all small connected graphs.

Prints, per condition, how many graphs pass and whether the exact oracle
found a counterexample among them.

    python3 demos/sweep_small.py [N]
"""

from __future__ import annotations

import sys
import time

from localham.harness import WitnessQuery, search_witness, sweep

if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    t0 = time.perf_counter()
    runs = sweep(f"enum:3-{n}")
    print(f"connected graphs with 3 <= n <= {n}: {time.perf_counter() - t0:.1f}s")
    for cid, run in runs.items():
        print(f"  {cid:24s} pass={run.counts['pass']:6d} -> {run.conclusion:26s} {run.verdict}")

    # weakening the local Dirac radius from 3 to 2 breaks the implication
    res = search_witness(WitnessQuery("local_dirac_M2", "hamiltonian", f"enum:{n}"))
    print("d(u) >= |M_2(u)|/2 but not hamiltonian:", res.outcome, res.hits[0]["graph6"] if res.hits else "")
