"""Command-line front end.

Exit codes are a stable contract: 0 success / all checks pass, 1 verification
failure, 2 usage or parse error, 3 exponential non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .blades import Signature, grade
from .exprio import (
    ExprSyntaxError,
    format_expression,
    mv_from_document,
    mv_to_document,
    parse_expression,
)
from .multivector import ConvergenceFailure, Field, Multivector
from .qtype import OpKind, TYPE_ORDER, detect_qtype, emit_table, pattern_of
from .verify import CheckConfig, CheckStatus, run_suite

_OP_BY_FLAG = {
    "product": OpKind.GEOMETRIC,
    "comm": OpKind.COMMUTATOR,
    "anticomm": OpKind.ANTICOMMUTATOR,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quatype",
        description="Exact Clifford algebra arithmetic with a mod-4 grading layer.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser(
        "verify", help="run verification suites",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    v.add_argument("--p", type=int, default=2, help="generators squaring to +1")
    v.add_argument("--q", type=int, default=2, help="generators squaring to -1")
    v.add_argument("--suite", default="all",
                   choices=["axioms", "grades", "tables", "theorems", "rank", "all"],
                   help="which checks to run")
    v.add_argument("--samples", type=int, default=200, help="random sample budget")
    v.add_argument("--seed", type=int, default=0, help="base seed for sampling")
    v.add_argument("--tol", type=float, default=1e-12, help="leakage tolerance")
    v.add_argument("--format", default="text", choices=["text", "json"],
                   help="report format")

    t = sub.add_parser(
        "table", help="print a 15 x 15 type composition table",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    t.add_argument("--op", required=True, choices=["product", "comm", "anticomm"],
                   help="operation the table composes under")
    t.add_argument("--format", default="markdown",
                   choices=["markdown", "csv", "json"], help="output format")

    ty = sub.add_parser(
        "type", help="classify a multivector",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    ty.add_argument("--p", type=int, default=2, help="generators squaring to +1")
    ty.add_argument("--q", type=int, default=2, help="generators squaring to -1")
    src = ty.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr", help="multivector expression, e.g. '1 + 2e12'")
    src.add_argument("--input", help="path to a multivector document (JSON)")
    ty.add_argument("--tol", type=float, default=1e-12,
                    help="detection tolerance (relative)")

    ev = sub.add_parser(
        "eval", help="evaluate an operation on expressions",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    ev.add_argument("--p", type=int, default=2, help="generators squaring to +1")
    ev.add_argument("--q", type=int, default=2, help="generators squaring to -1")
    ev.add_argument("--lhs", required=True, help="left operand expression")
    ev.add_argument("--rhs", default=None, help="right operand (binary ops only)")
    ev.add_argument("--op", required=True,
                    choices=["gp", "comm", "anticomm", "conj", "exp"],
                    help="gp/comm/anticomm are binary, conj/exp unary")
    return ap


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_verify(args: argparse.Namespace) -> int:
    sig = Signature(args.p, args.q)
    cfg = CheckConfig(sig=sig, seed=args.seed, samples=args.samples, tol=args.tol)
    reports = run_suite([args.suite], cfg)
    counts = {status: 0 for status in CheckStatus}
    for report in reports:
        counts[report.status] += 1
    if args.format == "json":
        payload = {
            "command": "verify",
            "p": sig.p,
            "q": sig.q,
            "suite": args.suite,
            "seed": cfg.seed,
            "samples": cfg.samples,
            "tol": cfg.tol,
            "strategy": cfg.strategy.value,
            "reports": [r.to_dict() for r in reports],
            "summary": {s.value: counts[s] for s in CheckStatus},
        }
        print(json.dumps(payload, indent=2))
    else:
        width = max(len(r.name) for r in reports)
        for r in reports:
            line = f"{r.name:<{width}}  {r.status.value.upper():<7}  cases={r.cases_run}"
            if r.notes:
                line += f"  [{r.notes}]"
            print(line)
            if r.counterexample is not None:
                ce = r.counterexample
                print(f"{'':<{width}}  counterexample: {ce.operation}("
                      f"{ce.lhs}{', ' + ce.rhs if ce.rhs else ''}) "
                      f"leaks {ce.magnitude:g} in {ce.component}")
        total = len(reports)
        print(f"{total} checks: {counts[CheckStatus.PASS]} pass, "
              f"{counts[CheckStatus.FAIL]} fail, "
              f"{counts[CheckStatus.SKIPPED]} skipped")
    return 1 if counts[CheckStatus.FAIL] else 0


def cmd_table(args: argparse.Namespace) -> int:
    table = emit_table(_OP_BY_FLAG[args.op])
    order = [str(t) for t in TYPE_ORDER]
    cells = [[str(c) for c in row] for row in table]
    if args.format == "json":
        print(json.dumps({"op": args.op, "order": order, "cells": cells}, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow([args.op] + order)
        for label, row in zip(order, cells):
            writer.writerow([label] + row)
    else:
        print("| " + args.op + " | " + " | ".join(order) + " |")
        print("|" + "---|" * (len(order) + 1))
        for label, row in zip(order, cells):
            print("| " + label + " | " + " | ".join(c or " " for c in row) + " |")
    return 0


def _load_operand(args: argparse.Namespace, sig: Signature) -> Multivector:
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return mv_from_document(doc, sig)
    return parse_expression(args.expr, sig)


def cmd_type(args: argparse.Namespace) -> int:
    sig = Signature(args.p, args.q)
    if args.tol < 0:
        return _fail_usage("--tol must be nonnegative")
    u = _load_operand(args, sig)
    qt = detect_qtype(u, args.tol)
    print(f"signature: {sig}")
    print(f"field: {u.field.value}")
    print(f"type: {qt if qt else '(empty)'}")
    print(f"pattern: {pattern_of(u, args.tol)}")
    for k in sorted(u.grades()):
        print(f"grade {k}: {format_expression(u.grade_project(k))}")
    print(f"even: {format_expression(u.parity_project(True))}")
    print(f"odd: {format_expression(u.parity_project(False))}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    sig = Signature(args.p, args.q)
    unary = args.op in ("conj", "exp")
    if unary and args.rhs is not None:
        return _fail_usage(f"--op {args.op} is unary; drop --rhs")
    if not unary and args.rhs is None:
        return _fail_usage(f"--op {args.op} needs --rhs")
    lhs = parse_expression(args.lhs, sig)
    if unary:
        result = lhs.conjugate() if args.op == "conj" else lhs.exp()
    else:
        rhs = parse_expression(args.rhs, sig)
        if lhs.field is not rhs.field:  # promote the real side
            lhs = Multivector(sig, Field.COMPLEX, dict(lhs.terms))
            rhs = Multivector(sig, Field.COMPLEX, dict(rhs.terms))
        if args.op == "gp":
            result = lhs.geometric_product(rhs)
        elif args.op == "comm":
            result = lhs.commutator(rhs)
        else:
            result = lhs.anticommutator(rhs)
    print(format_expression(result))
    print(json.dumps(mv_to_document(result)))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    handlers = {
        "verify": cmd_verify,
        "table": cmd_table,
        "type": cmd_type,
        "eval": cmd_eval,
    }
    try:
        return handlers[args.command](args)
    except ConvergenceFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
