"""Local (ball-based) sufficient conditions for Hamiltonicity and dominating cycles.

Modules: ``graph`` (representation and I/O), ``metrics`` (balls, connectivity,
independence), ``oracles`` (exact Hamiltonicity and cycle oracles),
``conditions`` (the condition catalog), ``constructive`` (local cycle
extension and path rotation), ``families`` (layered example graphs),
``corpus`` (isomorph-free enumeration), ``infinite`` (windows on oracle-given
infinite graphs), ``harness`` and ``cli``.
"""

from __future__ import annotations

from .conditions import CATALOG, FINITE_SUFFICIENT, ConditionReport, GraphContext, check_condition, lift_to_balls
from .families import ce_tight_H, g_pn, gn_dirac, mm_diam6, named_family
from .graph import Graph, GraphInputError, encode_graph6, from_edge_list, parse_graph6
from .oracles import (CycleCertificate, OracleVerdict, all_longest_cycles_dominating, cycle_through,
                      is_hamiltonian, longest_cycle, longest_path)

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "FINITE_SUFFICIENT", "ConditionReport", "CycleCertificate", "Graph", "GraphContext",
    "GraphInputError", "OracleVerdict", "all_longest_cycles_dominating", "ce_tight_H", "check_condition",
    "cycle_through", "encode_graph6", "from_edge_list", "g_pn", "gn_dirac", "is_hamiltonian", "lift_to_balls",
    "longest_cycle", "longest_path", "mm_diam6", "named_family", "parse_graph6",
]
