"""Command-line interface.

Exit codes: 0 clean, 1 counterexample or witness found (for ``check`` a
failing condition, for ``search-witness`` a hit), 2 input error, 3 resource
limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import harness
from .conditions import CATALOG, FINITE_SUFFICIENT, LIFTABLE, NA, UnknownCondition, check_condition, lift_to_balls
from .families import FAMILIES, named_family
from .graph import (GraphInputError, encode_graph6, format_edge_list, parse_edge_list_text, parse_graph6,
                    read_graph6_lines)
from .infinite import (CURVE_WINDOW_SLACK, LayeredOracle, curve_probe, make_oracle, random_layered_sets,
                       verify_window_witness, windowed_condition_check)
from .oracles import (LIMIT, Budget, ResourceLimitExceeded, all_longest_cycles_dominating, cycle_through,
                      is_hamiltonian, longest_cycle, longest_path)

EXIT_CLEAN, EXIT_FOUND, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read_graphs(args) -> list:
    if getattr(args, "graph6", None):
        return [parse_graph6(args.graph6)]
    if getattr(args, "edges", None):
        text = sys.stdin.read() if args.edges == "-" else open(args.edges).read()
        return [parse_edge_list_text(text)]
    src = open(args.file) if getattr(args, "file", None) else sys.stdin
    graphs = list(read_graph6_lines(src))
    if not graphs:
        raise GraphInputError("no graphs on input")
    return graphs


def _params(items) -> dict:
    out = {}
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise GraphInputError(f"parameter {item!r} is not key=value")
        try:
            out[key] = int(val)
        except ValueError:
            raise GraphInputError(f"parameter {key} must be an integer") from None
    return out


def _add_input(p) -> None:
    p.add_argument("--graph6", help="a single graph6 string")
    p.add_argument("--edges", metavar="FILE", help="edge-list file ('-' for stdin)")
    p.add_argument("--file", help="graph6 file (default: stdin)")


def cmd_check(args) -> int:
    code = EXIT_CLEAN
    for i, g in enumerate(_read_graphs(args)):
        t0 = time.perf_counter()
        if "@ball" in args.condition:
            base, _, r = args.condition.partition("@ball")
            if base not in LIFTABLE or not r.isdigit():
                raise GraphInputError(f"lifted form is <{'|'.join(LIFTABLE)}>@ball<r>")
            rep = lift_to_balls(g, base, int(r))
        else:
            rep = check_condition(g, args.condition, _params(args.param), scope=not args.no_scope)
        rec = harness.GraphRecord(i, encode_graph6(g), rep.id, rep.verdict, rep.witness,
                                  elapsed_ms=(time.perf_counter() - t0) * 1000)
        if args.json:
            d = rec.to_dict(args.timings)
            if rep.reason:
                d["reason"] = rep.reason
            _dump(d)
        else:
            line = f"graph {i}: {rep.id} {rep.verdict}"
            if rep.witness:
                line += f" witness={json.dumps(rep.witness, sort_keys=True)}"
            if rep.reason:
                line += f" ({rep.reason})"
            print(line)
        if rep.verdict not in ("pass", NA):
            code = EXIT_FOUND
    return code


ORACLE_CHOICES = ("hamiltonian", "longest-cycle", "dominating", "longest-path", "cycle-through")


def cmd_oracle(args) -> int:
    code = EXIT_CLEAN
    for i, g in enumerate(_read_graphs(args)):
        budget = Budget(max_nodes=args.max_nodes)
        rec = {"graph_index": i, "graph6": encode_graph6(g), "oracle": args.which}
        t0 = time.perf_counter()
        if args.which == "hamiltonian":
            v = is_hamiltonian(g, args.engine, budget)
        elif args.which == "dominating":
            v = all_longest_cycles_dominating(g, args.engine, budget)
        elif args.which == "cycle-through":
            if not args.S:
                raise GraphInputError("cycle-through needs --S")
            v = cycle_through(g, [int(x) for x in args.S.split(",")], args.engine, budget)
        elif args.which == "longest-cycle":
            v = None
            found = longest_cycle(g, args.engine, budget)
            rec["verdict"] = "acyclic" if found is None else found[0]
            if found is not None:
                rec["certificate"] = list(found[1].vertices)
        else:
            v = None
            path = longest_path(g, args.engine, budget)
            rec["verdict"] = len(path)
            rec["certificate"] = list(path)
        if v is not None:
            rec["verdict"] = v.answer
            if v.certificate is not None:
                rec["certificate"] = list(v.certificate.vertices)
            if v.answer == LIMIT:
                code = EXIT_LIMIT
        if args.timings:
            rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        if args.json:
            _dump(rec)
        else:
            extra = f" certificate={rec['certificate']}" if "certificate" in rec else ""
            print(f"graph {i}: {args.which} {rec['verdict']}{extra}")
    return code


def _run_exit(runs) -> int:
    verdicts = {r.verdict for r in runs}
    if "counterexample" in verdicts:
        return EXIT_FOUND
    if "resource-limit" in verdicts:
        return EXIT_LIMIT
    return EXIT_CLEAN


def _emit_runs(args, runs) -> None:
    if args.json:
        text = harness.report_json(runs, args.timings)
        if getattr(args, "output", None):
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
    else:
        for r in runs.values():
            c = r.counts
            print(f"{r.condition}: {r.verdict} (graphs={c['graphs']} pass={c['pass']} fail={c['fail']} "
                  f"n/a={c['not-applicable']} counterexamples={len(r.counterexamples)} "
                  f"resource-limited={len(r.resource_limited)})")


def cmd_verify(args) -> int:
    cids = args.conditions or list(FINITE_SUFFICIENT)
    runs = harness.sweep(args.source, cids, jobs=args.jobs, keep_all=args.all, max_nodes=args.max_nodes)
    _emit_runs(args, runs)
    return _run_exit(runs.values())


def cmd_report(args) -> int:
    args.json = True
    return cmd_verify(args)


def cmd_gen_family(args) -> int:
    g = named_family(args.name, *args.params)
    print(encode_graph6(g) if args.format == "graph6" else format_edge_list(g))
    return EXIT_CLEAN


def cmd_search(args) -> int:
    q = harness.WitnessQuery(args.must_pass, args.must_fail, args.source, args.max_hits)
    res = harness.search_witness(q, max_nodes=args.max_nodes)
    if args.json:
        _dump(res.to_dict())
    else:
        print(f"{q.must_pass} pass, {q.must_fail} fail over {q.source}: {res.outcome} "
              f"(searched {res.searched})")
        for h in res.hits:
            print(f"  graph {h['graph_index']} n={h['n']} {h['graph6']}")
    if res.found:
        return EXIT_FOUND
    return EXIT_LIMIT if res.resource_limited else EXIT_CLEAN


def _oracle_from(spec: str):
    name, _, rest = spec.partition(":")
    params = [int(x) for x in rest.split(",")] if rest else []
    return make_oracle(name, *params)


def cmd_infinite(args) -> int:
    o = _oracle_from(args.oracle)
    if args.action == "check":
        if not args.condition:
            raise GraphInputError("infinite check needs --condition")
        anchor = o.root if args.anchor is None else args.anchor
        rep = windowed_condition_check(o, anchor, args.radius, args.condition, _params(args.param))
        out = {"oracle": o.describe(), "anchor": anchor, "radius": args.radius, **rep.to_dict()}
        if rep.verdict == "fail":
            out["witness_valid"] = verify_window_witness(o, rep, _params(args.param))
        _dump(out) if args.json else print(
            f"{rep.id} on {o.describe()} R={args.radius}: {rep.verdict}"
            + (f" witness={json.dumps(rep.witness, sort_keys=True)}" if rep.witness else "")
            + (f" ({rep.reason})" if rep.reason else ""))
        return EXIT_FOUND if rep.verdict == "fail" else EXIT_CLEAN
    if args.S:
        sets = [tuple(int(x) for x in args.S.split(","))]
    else:
        if not isinstance(o, LayeredOracle):
            raise GraphInputError("random probes need a layered oracle; pass --S otherwise")
        sets = random_layered_sets(o, args.random, args.size, args.spread, args.seed)
    answers = set()
    for S in sets:
        res = curve_probe(o, S, slack=args.slack, budget=Budget(max_nodes=args.max_nodes))
        answers.add(res.verdict.answer)
        if args.json:
            _dump(res.to_dict())
        else:
            print(f"S={list(S)} r={res.r} R={res.window_radius} window={res.window_size}: "
                  f"{'cycle found' if res.found else res.verdict.answer}")
    if LIMIT in answers:
        return EXIT_LIMIT
    return EXIT_FOUND if "no" in answers else EXIT_CLEAN


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="localham", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="evaluate a condition on input graphs")
    p.add_argument("condition", help=f"condition id or <{'|'.join(LIFTABLE)}>@ball<r>")
    _add_input(p)
    p.add_argument("--param", action="append", help="key=value condition parameter")
    p.add_argument("--no-scope", action="store_true", help="evaluate the bare predicate")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="run an exact oracle")
    p.add_argument("which", choices=ORACLE_CHOICES)
    _add_input(p)
    p.add_argument("--S", help="comma-separated vertices for cycle-through")
    p.add_argument("--engine", choices=("auto", "dp", "backtrack"), default="auto")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_oracle)

    for name, func, helptext in (("verify-corpus", cmd_verify, "verify condition => conclusion over a corpus"),
                                 ("report", cmd_report, "JSON report of a corpus sweep")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("conditions", nargs="*", help="condition ids (default: all finite sufficient ones)")
        p.add_argument("--source", required=True, help="enum:N, enum:A-B, bip:N, graph6 file or '-'")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--all", action="store_true", help="keep a record for every graph")
        p.add_argument("--max-nodes", type=int, help="search-node budget per oracle call")
        p.add_argument("--json", action="store_true")
        p.add_argument("--timings", action="store_true")
        p.add_argument("--output", help="write the JSON report here")
        p.set_defaults(func=func)

    p = sub.add_parser("gen-family", help="emit a named family member")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_gen_family)

    p = sub.add_parser("search-witness", help="find graphs passing one predicate and failing another")
    p.add_argument("--pass", dest="must_pass", required=True, help="condition that must pass")
    p.add_argument("--fail", dest="must_fail", required=True,
                   help="condition id or conclusion tag (hamiltonian, dominating-longest-cycles) that must fail")
    p.add_argument("--source", required=True)
    p.add_argument("--max-hits", type=int, default=1)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("infinite", help="window checks and curve probes on built-in infinite graphs")
    p.add_argument("oracle", help="layered:P or path")
    p.add_argument("action", choices=("probe", "check"))
    p.add_argument("--condition", choices=[c for c in CATALOG if CATALOG[c].window_only])
    p.add_argument("--param", action="append")
    p.add_argument("--radius", type=int, default=9, help="window radius for check")
    p.add_argument("--anchor", type=int)
    p.add_argument("--S", help="comma-separated oracle ids to probe")
    p.add_argument("--random", type=int, default=10, help="number of random sets")
    p.add_argument("--size", type=int, default=6)
    p.add_argument("--spread", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--slack", type=int, default=CURVE_WINDOW_SLACK, help="window radius is r + slack")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_infinite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_CLEAN
    try:
        return args.func(args)
    except (ValueError, UnknownCondition, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownCondition) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
