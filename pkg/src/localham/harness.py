"""Corpus sweeps, implication verification and witness search.

A source string names a corpus:

* ``enum:N`` or ``enum:A-B``: connected graphs of order ``<= N`` (or ``A..B``)
  from the built-in enumerator,
* ``bip:N`` or ``bip:A-B``: connected balanced bipartite graphs,
* anything else: a graph6 file (``-`` for stdin).

Graphs are numbered from 0 in source order. Reports list records by that
index, so serial and pooled runs produce identical output.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .conditions import (DOMINATING, FAIL, FINITE_SUFFICIENT, HAMILTONIAN, NA, PASS,
                         GraphContext, check_condition, evaluate, get_condition, guaranteed_conclusion,
                         recheck_witness)
from .corpus import enumerate_balanced_bipartite, enumerate_connected_upto, load_graph6_file
from .graph import Graph, GraphInputError, encode_graph6, parse_graph6, read_graph6_lines
from .oracles import LIMIT, NO, Budget, OracleVerdict, SubsetTables, all_longest_cycles_dominating, is_hamiltonian

ORACLE_TAGS = (HAMILTONIAN, DOMINATING)


# -- sources -------------------------------------------------------------------------------


def _range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            a, b = text.split("-", 1)
            return int(a), int(b)
        return 1, int(text)
    except ValueError:
        raise GraphInputError(f"bad order range {text!r}") from None


def iter_source(source: str) -> Iterator[Graph]:
    if source.startswith("enum:"):
        lo, hi = _range(source[5:])
        yield from enumerate_connected_upto(hi, n_min=lo)
    elif source.startswith("bip:"):
        lo, hi = _range(source[4:])
        for n in range(max(lo, 2), hi + 1):
            yield from enumerate_balanced_bipartite(n)
    elif source == "-":
        yield from read_graph6_lines(sys.stdin)
    else:
        try:
            yield from load_graph6_file(source)
        except OSError as exc:
            raise GraphInputError(f"cannot read {source}: {exc}") from None


# -- records -------------------------------------------------------------------------------


@dataclass
class GraphRecord:
    graph_index: int
    graph6: str
    condition: str
    verdict: str
    witness: dict | None = None
    oracle: dict | None = None
    certificate: list | None = None
    elapsed_ms: float | None = None

    def to_dict(self, timings: bool = False) -> dict:
        out = {"graph_index": self.graph_index, "graph6": self.graph6,
               "condition": self.condition, "verdict": self.verdict}
        for key in ("witness", "oracle", "certificate"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if timings and self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    @property
    def answer(self) -> str | None:
        return self.oracle["answer"] if self.oracle else None


class Conclusions:
    """Lazily evaluated exact conclusions for one graph, shared across conditions."""

    def __init__(self, g: Graph, max_nodes: int | None = None, engine: str = "auto"):
        self.g = g
        self.max_nodes = max_nodes
        self.engine = engine
        self._tables = None
        self._cache: dict[str, OracleVerdict] = {}

    @property
    def tables(self):
        if self._tables is None and self.g.n <= 16 and self.engine != "backtrack":
            self._tables = SubsetTables(self.g)
        return self._tables

    def get(self, tag: str) -> OracleVerdict:
        v = self._cache.get(tag)
        if v is None:
            budget = Budget(max_nodes=self.max_nodes)
            if tag == HAMILTONIAN:
                v = is_hamiltonian(self.g, self.engine, budget, tables=self.tables)
            elif tag == DOMINATING:
                v = all_longest_cycles_dominating(self.g, self.engine, budget, tables=self.tables)
            else:
                raise GraphInputError(f"unknown conclusion {tag!r}")
            self._cache[tag] = v
        return v


def _cross_engine(g: Graph, tag: str) -> str:
    """Recompute a conclusion by backtracking (the default engine is the DP up to 16 vertices)."""
    return Conclusions(g, engine="backtrack").get(tag).answer


def revalidate_counterexample(g: Graph, cid: str, params: dict | None = None) -> bool:
    """A claimed counterexample must pass the condition afresh and fail the conclusion on both engines."""
    rep = check_condition(g, cid, params)
    tag = guaranteed_conclusion(cid)
    return rep.passed and tag is not None and Conclusions(g).get(tag).answer == NO and _cross_engine(g, tag) == NO


def _graph_records(index: int, g: Graph, cids: Sequence[str], max_nodes: int | None,
                   params: dict | None) -> list[GraphRecord]:
    ctx = GraphContext(g)
    concl = Conclusions(g, max_nodes)
    g6 = encode_graph6(g)
    out = []
    for cid in cids:
        t0 = time.perf_counter()
        rep = evaluate(ctx, cid, params)
        rec = GraphRecord(index, g6, cid, rep.verdict, rep.witness)
        tag = guaranteed_conclusion(cid)
        if rep.passed and tag is not None:
            v = concl.get(tag)
            rec.oracle = {"conclusion": tag, "answer": v.answer}
            if v.certificate is not None and (tag == HAMILTONIAN or v.answer == NO):
                rec.certificate = list(v.certificate.vertices)
        rec.elapsed_ms = (time.perf_counter() - t0) * 1000
        out.append(rec)
    return out


def _worker(args):
    index, g6, cids, max_nodes, params = args
    return _graph_records(index, parse_graph6(g6), cids, max_nodes, params)


# -- verification runs --------------------------------------------------------------------


@dataclass
class VerificationRun:
    source: str
    condition: str
    conclusion: str | None
    counts: dict = field(default_factory=lambda: {"graphs": 0, PASS: 0, FAIL: 0, NA: 0})
    records: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    resource_limited: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "counterexample"
        if self.resource_limited:
            return "resource-limit"
        return "clean"

    def add(self, rec: GraphRecord, keep_all: bool) -> None:
        self.counts["graphs"] += 1
        self.counts[rec.verdict] += 1
        if rec.answer == NO:
            self.counterexamples.append(rec)
        elif rec.answer == LIMIT:
            self.resource_limited.append(rec)
        elif keep_all:
            self.records.append(rec)

    def to_dict(self, timings: bool = False) -> dict:
        recs = sorted(self.records + self.counterexamples + self.resource_limited, key=lambda r: r.graph_index)
        return {
            "source": self.source,
            "condition": self.condition,
            "conclusion": self.conclusion,
            "verdict": self.verdict,
            "counts": dict(self.counts),
            "counterexamples": [r.graph_index for r in self.counterexamples],
            "resource_limited": [r.graph_index for r in self.resource_limited],
            "records": [r.to_dict(timings) for r in recs],
        }


def sweep(source: str | Iterable[Graph], cids: Sequence[str] = FINITE_SUFFICIENT, jobs: int = 1,
          keep_all: bool = False, max_nodes: int | None = None, params: dict | None = None,
          label: str | None = None) -> dict[str, VerificationRun]:
    """Check every condition on every corpus graph and the conclusion wherever it passes.

    Counterexamples are re-validated from scratch before they are kept; a
    failed re-validation raises, since it means the library disagrees with
    itself.
    """
    for cid in cids:
        if get_condition(cid).window_only:
            raise GraphInputError(f"{cid} is a window condition; use the infinite subcommand")
    name = label or (source if isinstance(source, str) else "<graphs>")
    graphs = iter_source(source) if isinstance(source, str) else iter(source)
    runs = {cid: VerificationRun(name, cid, guaranteed_conclusion(cid)) for cid in cids}

    def handle(batch: list[GraphRecord]) -> None:
        for rec in batch:
            if rec.answer == NO:
                g = parse_graph6(rec.graph6)
                if not revalidate_counterexample(g, rec.condition, params):
                    raise RuntimeError(f"counterexample for {rec.condition} at graph {rec.graph_index} "
                                       "did not re-validate")
            runs[rec.condition].add(rec, keep_all)

    if jobs <= 1:
        for i, g in enumerate(graphs):
            handle(_graph_records(i, g, cids, max_nodes, params))
    else:
        tasks = ((i, encode_graph6(g), tuple(cids), max_nodes, params) for i, g in enumerate(graphs))
        with Pool(jobs) as pool:
            for batch in pool.imap(_worker, tasks, chunksize=64):
                handle(batch)
    return runs


def verify_implication(source: str | Iterable[Graph], cid: str, **kw) -> VerificationRun:
    return sweep(source, (cid,), **kw)[cid]


def report_json(runs: dict[str, VerificationRun] | Iterable[VerificationRun], timings: bool = False) -> str:
    items = runs.values() if isinstance(runs, dict) else runs
    doc = {"runs": [r.to_dict(timings) for r in items]}
    return json.dumps(doc, indent=2, sort_keys=True)


# -- witness search ------------------------------------------------------------------------


@dataclass
class WitnessQuery:
    must_pass: str
    must_fail: str          # condition id or conclusion tag
    source: str
    max_hits: int = 1


@dataclass
class WitnessResult:
    query: WitnessQuery
    hits: list = field(default_factory=list)
    searched: int = 0
    resource_limited: list = field(default_factory=list)
    max_order: int = 0

    @property
    def found(self) -> bool:
        return bool(self.hits)

    @property
    def outcome(self) -> str:
        if self.hits:
            return f"found {len(self.hits)}"
        return f"none <= {self.max_order}"

    def to_dict(self) -> dict:
        return {"must_pass": self.query.must_pass, "must_fail": self.query.must_fail,
                "source": self.query.source, "searched": self.searched, "outcome": self.outcome,
                "hits": self.hits, "resource_limited": self.resource_limited}


def _fails(g: Graph, ctx: GraphContext, what: str, concl: Conclusions) -> tuple[bool, dict]:
    if what in ORACLE_TAGS:
        v = concl.get(what)
        info = {"oracle": {"conclusion": what, "answer": v.answer}}
        if v.certificate is not None:
            info["certificate"] = list(v.certificate.vertices)
        return v.answer == NO, info
    rep = evaluate(ctx, what)
    return rep.verdict == FAIL, {"witness": rep.witness}


def revalidate_witness(g: Graph, q: WitnessQuery) -> bool:
    if not check_condition(g, q.must_pass).passed:
        return False
    if q.must_fail in ORACLE_TAGS:
        return Conclusions(g).get(q.must_fail).answer == NO and _cross_engine(g, q.must_fail) == NO
    rep = check_condition(g, q.must_fail)
    return rep.verdict == FAIL and recheck_witness(g, rep)


def search_witness(q: WitnessQuery, max_nodes: int | None = None) -> WitnessResult:
    """Graphs of the source passing ``must_pass`` and failing ``must_fail``."""
    get_condition(q.must_pass)
    if q.must_fail not in ORACLE_TAGS:
        get_condition(q.must_fail)
    res = WitnessResult(q)
    for i, g in enumerate(iter_source(q.source)):
        res.searched += 1
        res.max_order = max(res.max_order, g.n)
        ctx = GraphContext(g)
        if not evaluate(ctx, q.must_pass).passed:
            continue
        concl = Conclusions(g, max_nodes)
        bad, info = _fails(g, ctx, q.must_fail, concl)
        if info.get("oracle", {}).get("answer") == LIMIT:
            res.resource_limited.append(i)
            continue
        if not bad:
            continue
        if not revalidate_witness(g, q):
            raise RuntimeError(f"witness at graph {i} did not re-validate")
        hit = {"graph_index": i, "graph6": encode_graph6(g), "n": g.n}
        hit.update(info)
        res.hits.append(hit)
        if len(res.hits) >= q.max_hits:
            break
    return res
