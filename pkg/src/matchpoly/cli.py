"""Command line front end.

Three commands: `verify` runs the identity suites and prints their reports,
`count` runs the counting pipelines on a graph file, `emit` writes the
gadget and reduction graphs in the JSON interchange format.  Output is JSON
on stdout (deterministic key order), or an aligned table with --pretty.

Exit codes partition the failure classes: 2 malformed input, 3 violated
precondition, 4 exhausted resources (including insufficient precision),
5 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constants import (
    MAX_PRECISION,
    VARIANTS,
    crossing_constant,
    gadget_constants,
    legacy_delta1_c_display,
    verify_constants,
)
from .errors import MatchpolyError
from .gadgets import (
    ATTACHMENTS,
    build_crossing_gadget,
    build_subgadget,
    verify_crossing_gadget,
    verify_subgadget,
)
from .graphs import circular_layout, dump_graph, graph_to_json, load_graph
from .matching import (
    DEFAULT_NODE_BUDGET,
    ORACLE_BOUND,
    count_matchings,
    count_maximum_matchings,
)
from .reductions import (
    PrecisionPolicy,
    build_gi,
    count_matchings_via_pendant,
    count_via_reduction,
    replace_crossings,
)

_TERMINALS = ("x", "y", "z", "w")


def build_parser():
    p = argparse.ArgumentParser(
        prog="matchpoly",
        description="exact verification and counting for matching reductions",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, precision_default=256):
        sp.add_argument("--precision", type=int, default=precision_default,
                        help="working precision in bits")
        sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="recursion node budget")
        sp.add_argument("--variant", choices=VARIANTS, default="corrected",
                        help="weight family to use")
        sp.add_argument("--pretty", action="store_true",
                        help="aligned table instead of JSON")

    pv = sub.add_parser("verify", help="run an identity verification suite")
    pv.add_argument("target",
                    choices=("constants", "delta1", "delta2", "crossing", "all"))
    common(pv)
    pv.add_argument("--skip-direct", action="store_true",
                    help="skip the direct full-recursion route of the crossing check")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("count", help="count matchings of a graph file")
    pc.add_argument("mode", choices=("direct", "maximum", "via-reduction", "pendant"))
    pc.add_argument("file", help="graph in JSON interchange format")
    common(pc, precision_default=128)
    pc.add_argument("--seed", type=int, default=0,
                    help="layout seed when the file carries no drawing")
    pc.add_argument("--oracle", action="store_true",
                    help="force the brute-force cross-check regardless of size")
    pc.set_defaults(func=cmd_count)

    pe = sub.add_parser("emit", help="write gadget or reduction graphs")
    pe.add_argument("what", choices=("delta1", "delta2", "crossing", "g1", "gi"))
    pe.add_argument("file", nargs="?", help="input graph (g1 and gi only)")
    pe.add_argument("--tag", help="weight tag to expand (gi)")
    pe.add_argument("--i", type=int, default=1, help="pendant multiplicity (gi)")
    pe.add_argument("--seed", type=int, default=0,
                    help="layout seed when the file carries no drawing")
    pe.add_argument("--output", help="write to this path instead of stdout")
    pe.add_argument("--pretty", action="store_true")
    pe.set_defaults(func=cmd_emit)
    return p


def _constants_dump(precision):
    out = {}
    for variant in VARIANTS:
        w1 = gadget_constants("delta1", precision, variant)
        w2 = gadget_constants("delta2", precision, variant)
        cc = crossing_constant(precision, variant)
        out[variant] = {
            "a_delta1": w1.a.midpoint_str(20),
            "b_delta1": w1.b.midpoint_str(20),
            "c_delta1": w1.c.midpoint_str(20),
            "C1": w1.norm.midpoint_str(20),
            "a_delta2": w2.a.midpoint_str(20),
            "b_delta2": w2.b.midpoint_str(20),
            "c_delta2": w2.c.midpoint_str(20),
            "C2": w2.norm.midpoint_str(20),
            "C": cc.value.midpoint_str(20),
        }
    # the two displayed values that disagree with their own closed forms
    out["recomputed"] = {
        "c_delta2_from_closed_form": gadget_constants(
            "delta2", precision, "legacy"
        ).c.midpoint_str(20),
        "c_delta1_displayed": legacy_delta1_c_display(precision).midpoint_str(20),
    }
    return out


def cmd_verify(args):
    reports = []
    extra = {}
    if args.target in ("constants", "all"):
        reports.append(verify_constants(args.precision))
        extra["constants"] = _constants_dump(args.precision)
    if args.target in ("delta1", "all"):
        reports.append(
            verify_subgadget("delta1", args.precision, args.variant,
                             budget=args.budget)
        )
    if args.target in ("delta2", "all"):
        reports.append(
            verify_subgadget("delta2", args.precision, args.variant,
                             budget=args.budget)
        )
    if args.target in ("crossing", "all"):
        reports.append(
            verify_crossing_gadget(args.precision, args.variant,
                                   budget=args.budget,
                                   direct=not args.skip_direct)
        )
    passed = all(r.passed for r in reports)
    out = {
        "command": "verify",
        "target": args.target,
        "precision": args.precision,
        "variant": args.variant,
        "passed": passed,
        "reports": [r.to_json() for r in reports],
    }
    out.update(extra)
    return out, 0 if passed else 5


def cmd_count(args):
    g, drawing = load_graph(args.file)
    bound = max(ORACLE_BOUND, g.n) if args.oracle else ORACLE_BOUND
    out = {"command": "count", "mode": args.mode, "file": args.file}
    if args.mode == "direct":
        out["count"] = count_matchings(g, budget=args.budget, bound=bound)
    elif args.mode == "maximum":
        out["count"] = count_maximum_matchings(g, budget=args.budget, bound=bound)
    elif args.mode == "pendant":
        out["count"] = count_matchings_via_pendant(g, budget=args.budget)
    else:
        cert = count_via_reduction(
            g,
            drawing,
            seed=args.seed,
            policy=PrecisionPolicy(args.precision, MAX_PRECISION),
            variant=args.variant,
            budget=args.budget,
            oracle_bound=bound if args.oracle else ORACLE_BOUND,
        )
        out["count"] = cert.count
        out["certificate"] = cert.to_json()
    return out, 0


def cmd_emit(args):
    if args.what in ("delta1", "delta2"):
        t = build_subgadget(args.what)
        obj = graph_to_json(t.graph, t.drawing)
        obj["kind"] = args.what
        obj["attachments"] = dict(t.attachments)
    elif args.what == "crossing":
        cg = build_crossing_gadget()
        internal = [v for v in cg.graph.ids if v not in _TERMINALS]
        sub = cg.graph.induced_subgraph(internal)
        coords = {v: cg.drawing.coords[v] for v in internal}
        obj = graph_to_json(sub, type(cg.drawing)(coords))
        obj["kind"] = "crossing"
        obj["attachments"] = dict(ATTACHMENTS)
    elif args.what == "g1":
        if not args.file:
            raise SystemExit("emit g1 requires a graph file")
        g, drawing = load_graph(args.file)
        if drawing is None:
            drawing = circular_layout(g, args.seed)
        inst = replace_crossings(g, drawing)
        obj = graph_to_json(inst.graph, inst.drawing)
        obj["kind"] = "g1"
        obj["crossings_replaced"] = inst.k
    else:
        if not args.file:
            raise SystemExit("emit gi requires a graph file")
        if not args.tag:
            raise SystemExit("emit gi requires --tag")
        g, _ = load_graph(args.file)
        gi = build_gi(g, args.tag, args.i)
        obj = graph_to_json(gi)
        obj["kind"] = "gi"
        obj["tag"] = args.tag
        obj["multiplicity"] = args.i
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(obj, indent=2) + "\n")
        return {
            "command": "emit",
            "what": args.what,
            "written": args.output,
            "vertices": len(obj["vertices"]),
            "edges": len(obj["edges"]),
        }, 0
    return obj, 0


def _pretty(out, stream):
    for rep in out.get("reports", ()):
        stream.write(f"{rep['title']}  [{'pass' if rep['passed'] else 'FAIL'}]\n")
        for row in rep["rows"]:
            mark = "ok " if row["passed"] else "FAIL"
            rad = row["radius_exponent"]
            rad_s = "exact" if rad is None else f"rad<=2^{rad}"
            detail = f"  ({row['detail']})" if row.get("detail") else ""
            stream.write(f"  [{mark}] {row['label']:56s} {rad_s}{detail}\n")
    for key in ("count", "certificate", "constants"):
        if key in out:
            stream.write(f"{key}: {json.dumps(out[key], indent=2)}\n")
    if "vertices" in out and "edges" in out and "command" not in out:
        stream.write(
            f"graph: {len(out['vertices'])} vertices, {len(out['edges'])} edges\n"
        )


_EMIT_VALUE_FLAGS = {"--tag", "--i", "--seed", "--output"}


def _reorder_emit(argv):
    """Allow `emit gi --tag t1 --i 2 file.json`: argparse wants positionals
    in one contiguous span, so hoist them in front of the flags."""
    if not argv or argv[0] != "emit":
        return argv
    flags, pos = [], []
    i = 1
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("-"):
            flags.append(tok)
            if tok in _EMIT_VALUE_FLAGS and i + 1 < len(argv):
                flags.append(argv[i + 1])
                i += 1
        else:
            pos.append(tok)
        i += 1
    return ["emit"] + pos + flags


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_reorder_emit(list(argv)))
    try:
        out, code = args.func(args)
    except MatchpolyError as exc:
        json.dump(
            {"error": type(exc).__name__, "message": str(exc)},
            sys.stderr,
            indent=2,
        )
        sys.stderr.write("\n")
        return exc.exit_code
    if getattr(args, "pretty", False):
        _pretty(out, sys.stdout)
    else:
        print(json.dumps(out, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
