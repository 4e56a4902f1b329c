"""Command-line interface.

Exit codes: 0 success, 1 a verification failed (or an RSK inverse hit
mismatched shapes), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import correspondence, growth, operators, qsym
from .errors import CellFailure, LimitExceeded, SchurTreesError, ShapeMismatch
from .graph import export_dot, export_jsonl
from .labelling import Path
from .trees import Tree, enumerate_trees

MAX_NODES = 8
MAX_DEG = 5
MAX_TREES_N = 12


class UsageError(Exception):
    pass


def _guard(args, name, value, limit):
    if value is not None and value > limit and not getattr(args, "unsafe_no_guard", False):
        raise UsageError(f"{name}={value} exceeds the limit {limit} (use --unsafe-no-guard)")


def _tree(text):
    return Tree.parse(text)


def cmd_trees(args, out):
    _guard(args, "n", args.n, MAX_TREES_N)
    trees = enumerate_trees(args.n)
    if args.count:
        print(len(trees), file=out)
    elif args.format == "json":
        for t in trees:
            print(json.dumps({"tree": str(t), "nodes": len(t)}), file=out)
    else:
        for t in trees:
            print(t, file=out)
    return 0


def cmd_apply(args, out):
    _guard(args, "i", args.i, MAX_DEG)
    result = operators.apply(args.op, args.i, _tree(args.tree))
    if args.format == "json":
        for t, c in result.items():
            print(json.dumps({"tree": str(t), "coeff": c}), file=out)
    else:
        print(result, file=out)
    return 0


def _emit_reports(reports, out):
    for r in reports:
        print(r.to_json(), file=out)
    return 0 if all(r.ok for r in reports) else 1


def cmd_verify(args, out):
    _guard(args, "max-nodes", args.max_nodes, MAX_NODES)
    for name in ("max_deg", "max_degree", "max_total"):
        _guard(args, name.replace("_", "-"), getattr(args, name), MAX_DEG)
    if args.vars:
        for v in args.vars:
            _guard(args, "vars", v, MAX_DEG)
    n, d = args.max_nodes, args.max_deg
    target = args.target
    if target == "commutation":
        reports = [operators.check_commutation("U", n, d, d)]
    elif target == "dual-commutation":
        reports = [operators.check_commutation("U'", n, d, d)]
    elif target == "dual-graph":
        reports = [operators.check_dual_graph(n), operators.check_total_down(n),
                   operators.check_adjoint_total(n)]
    elif target == "bijection":
        reports = [correspondence.check_bijection(args.family, n, d)]
    elif target == "labelling-sum":
        nv = args.vars[0] if args.vars else 3
        reports = [qsym.labelling_sum_check(n, nv)]
    elif target == "cauchy":
        p, q = args.vars or (2, 2)
        reports = [qsym.cauchy_check(args.family, p, q, args.max_degree)]
    elif target == "rsk":
        p, q = args.vars or (2, 2)
        reports = [growth.check_rsk(args.family, p, q, args.max_total)]
    else:
        raise UsageError(f"unknown target {target}")
    return _emit_reports(reports, out)


def cmd_poly(args, out):
    _guard(args, "vars", args.vars, MAX_DEG * 2)
    poly = qsym.schur_poly(args.symbol, _tree(args.tree), _tree(args.to), args.vars)
    print(poly.to_json() if args.format == "json" else poly, file=out)
    return 0


def _read_matrix(path):
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]
    try:
        return growth.as_matrix([[cell.strip() for cell in row] for row in rows])
    except ValueError as exc:
        raise UsageError(f"malformed matrix: {exc}") from exc


def cmd_rsk(args, out):
    if args.direction == "forward":
        P, Q, diagram = growth.rsk_forward(_read_matrix(args.file), args.family)
        doc = {"P": P.to_json(), "Q": Q.to_json(), "shape": str(P.end)}
        if args.diagram:
            doc["diagram"] = diagram.to_json()
        print(json.dumps(doc), file=out)
        return 0
    with open(args.file) as fh:
        try:
            doc = json.load(fh)
            P = Path(args.family, tuple(Tree.parse(t) for t in doc["P"]))
            Q = Path("D", tuple(Tree.parse(t) for t in doc["Q"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed path file: {exc}") from exc
    try:
        m = growth.rsk_inverse(P, Q, args.family)
    except (ShapeMismatch, CellFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(m)
    return 0


def cmd_graph(args, out):
    try:
        if args.format == "jsonl":
            text = export_jsonl(args.family, args.i, args.n, args.unsafe_no_guard)
        else:
            text = export_dot(args.family, args.i, args.n, args.unsafe_no_guard)
    except LimitExceeded as exc:
        raise UsageError(str(exc)) from exc
    out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurtrees", description="Up/down operators on planar binary trees.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unsafe-no-guard", action="store_true", help="lift the size guards")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trees", parents=[common], help="list the trees with n nodes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a tree")
    p.add_argument("-o", "--op", choices=list(operators.SYMBOLS), required=True)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-t", "--tree", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check an identity")
    p.add_argument("target", choices=["commutation", "dual-commutation", "dual-graph", "bijection",
                                      "labelling-sum", "cauchy", "rsk"])
    p.add_argument("--max-nodes", type=int, default=5)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--max-total", type=int, default=4)
    p.add_argument("--family", choices=["U", "U'"], default="U")
    p.add_argument("--vars", type=int, nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poly", parents=[common], help="generating polynomial of a pair of trees")
    p.add_argument("-s", "--symbol", choices=["D", "U", "U'"], required=True)
    p.add_argument("-t", "--tree", required=True)
    p.add_argument("--to", default="{}")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("rsk", parents=[common], help="growth-diagram RSK on a CSV matrix (or its inverse)")
    p.add_argument("file")
    p.add_argument("--family", choices=["U", "U'"], default="U")
    p.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("graph", parents=[common], help="export a graded graph")
    p.add_argument("-f", "--family", choices=["U", "U'", "D"], required=True)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["dot", "jsonl"], default="dot")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, SchurTreesError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
