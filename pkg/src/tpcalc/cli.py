"""Command-line front end.

Subcommands: expand, eval, count, porteous, extract, interp, oracle, verify.
Exit codes: 0 success, 1 a mathematical check failed, 2 usage errors
(unknown subcommand, model or type).  `--json` emits a structured report
carrying the same payload as the text output; timing lives outside the
checked payload so reports are deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import verify as verify_suites
from .algebra import render_class
from .chow import ModelError
from .interp import assemble_system, solve_exact
from .maps import get_model, model_names
from .oracle import CurveParam, OracleError, double_point_degree, poly_str
from .symbolic import parse_expr, render_expr
from .tpcore import (
    InconsistentExtraction,
    MissingResidual,
    MultiSingType,
    SingTypeError,
    count_points,
    default_db,
    evaluate,
    expand_source,
    expand_target,
    extract_residual,
    multi_type,
    thom_porteous,
)


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    inputs: dict
    result: object = None
    checks: list = field(default_factory=list)
    elapsed_ms: float | None = None

    def add_check(self, name: str, expected, got) -> bool:
        ok = expected == got
        self.checks.append(
            {"name": name, "expected": str(expected), "got": str(got), "pass": ok}
        )
        return ok

    @property
    def all_pass(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "checks": self.checks,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, indent=2, default=str)

    def to_text(self) -> str:
        lines = []
        if self.result is not None:
            if isinstance(self.result, dict):
                for key, value in self.result.items():
                    lines.append(f"{key}: {value}")
            else:
                lines.append(str(self.result))
        for c in self.checks:
            status = "PASS" if c["pass"] else "FAIL"
            lines.append(
                f"{status} {c['name']}: expected {c['expected']}, got {c['got']}"
            )
        if self.elapsed_ms is not None:
            lines.append(f"# elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


def _load_db(args):
    db = default_db()
    path = getattr(args, "db", None)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            db = type(db).loads(fh.read(), base=db)
    return db


def _get_type(args) -> MultiSingType:
    return multi_type(args.type, args.kappa)


def _cmd_expand(args) -> Report:
    db = _load_db(args)
    t = _get_type(args)
    rep = Report("expand", {"type": args.type, "kappa": args.kappa,
                            "side": args.side, "normalized": args.normalized})
    if args.side == "target":
        expr = expand_target(t, db)
        if args.normalized:
            expr = expr / t.aut_order
    else:
        expr = expand_source(t, db)
        if args.normalized:
            expr = expr / t.aut_order_rest
    rep.result = render_expr(expr)
    return rep


def _cmd_eval(args) -> Report:
    db = _load_db(args)
    model = get_model(args.model)
    rep = Report("eval", {"model": args.model, "expr": args.expr,
                          "type": args.type, "side": args.side,
                          "normalized": args.normalized})
    if (args.expr is None) == (args.type is None):
        raise UsageError("eval needs exactly one of --expr or --type")
    if args.expr is not None:
        expr = parse_expr(args.expr)
        side = args.side or (expr.side if expr.side != "scalar" else "source")
    else:
        t = multi_type(args.type, model.kappa)
        side = args.side or "target"
        if side == "target":
            expr = expand_target(t, db)
            if args.normalized:
                expr = expr / t.aut_order
        else:
            expr = expand_source(t, db)
            if args.normalized:
                expr = expr / t.aut_order_rest
    value = evaluate(expr, model, side=side)
    rep.result = render_class(value)
    return rep


def _cmd_count(args) -> Report:
    db = _load_db(args)
    model = get_model(args.model)
    t = multi_type(args.type, model.kappa)
    rep = Report("count", {"model": args.model, "type": args.type})
    rep.result = str(count_points(model, t, db))
    return rep


def _cmd_porteous(args) -> Report:
    rep = Report("porteous", {"kappa": args.kappa, "k": args.k})
    rep.result = render_expr(thom_porteous(args.kappa, args.k))
    return rep


def _cmd_extract(args) -> Report:
    db = _load_db(args)
    t = _get_type(args)
    known = parse_expr(args.known)
    R = extract_residual(t, known, args.side, db)
    rep = Report("extract", {"type": args.type, "kappa": args.kappa,
                             "side": args.side, "known": args.known})
    rep.result = f"types=[{','.join(t.key)}] kappa={t.kappa} R= {render_expr(R)}"
    return rep


def _cmd_interp(args) -> Report:
    db = _load_db(args)
    t = _get_type(args)
    constraints = []
    for spec in args.constraint:
        name, _, value = spec.partition("=")
        if not value:
            raise UsageError(f"constraint {spec!r} must look like model=count")
        constraints.append((name.strip(), get_model(name.strip()), Fraction(value)))
    system = assemble_system(t, db, constraints)
    outcome = solve_exact(system)
    rep = Report("interp", {"type": args.type, "kappa": args.kappa,
                            "constraints": list(args.constraint)})
    if outcome.status == "unique":
        rep.result = (
            f"types=[{','.join(t.key)}] kappa={t.kappa} "
            f"R= {render_expr(outcome.residual())}"
        )
    elif outcome.status == "underdetermined":
        kern = ["; ".join(f"{render_expr_index(I)}={a}" for I, a in vec.items())
                for vec in outcome.kernel]
        rep.result = {
            "status": "underdetermined",
            "particular": {render_expr_index(I): str(a)
                           for I, a in outcome.solution.items()},
            "kernel": kern,
        }
    else:
        rep.result = {"status": "inconsistent", "violated": outcome.violated}
    return rep


def render_expr_index(I) -> str:
    from .symbolic import c_monomial

    return render_expr(c_monomial(I))


def _cmd_oracle(args) -> Report:
    curve = CurveParam.parse(args.curve)
    deg = double_point_degree(curve)
    d = curve.degree
    predicted = verify_suites.engine_double_point_degree(d)
    rep = Report("oracle", {"curve": args.curve})
    rep.result = {
        "x": poly_str(curve.x),
        "y": poly_str(curve.y),
        "degree": d,
        "immersive": curve.is_immersive(),
        "delta_degree": deg,
        "engine_class_degree": str(predicted),
    }
    return rep


def _cmd_verify(args) -> Report:
    rep = Report("verify", {"suite": args.suite})
    checks = verify_suites.run_suite(args.suite)
    rep.checks = checks
    return rep


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpcalc",
        description="Exact multi-singularity class expansions, evaluations "
                    "and enumerative counts.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_db(p):
        p.add_argument("--db", help="residual-db file merged over the built-in store")

    def add_json(p):
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("expand", help="print a multi-singularity expansion")
    p.add_argument("--type", required=True, help="comma-separated names, e.g. A0,A0,A1")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--side", choices=["source", "target"], default="target")
    p.add_argument("--normalized", action="store_true",
                   help="divide by #Aut (target) or #Aut of the tail (source)")
    add_db(p); add_json(p)
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("eval", help="evaluate an expression on a named model")
    p.add_argument("--model", required=True,
                   help=f"one of: {', '.join(model_names())}")
    p.add_argument("--expr", help="polynomial in c<j>, s_<digits>, fs_<digits>")
    p.add_argument("--type", help="expand this multi-type instead of --expr")
    p.add_argument("--side", choices=["source", "target"])
    p.add_argument("--normalized", action="store_true")
    add_db(p); add_json(p)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("count", help="count points of a zero-dimensional locus")
    p.add_argument("--model", required=True)
    p.add_argument("--type", required=True)
    add_db(p); add_json(p)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("porteous", help="corank-1 determinantal polynomial")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_json(p)
    p.set_defaults(fn=_cmd_porteous)

    p = sub.add_parser("extract", help="invert an expansion to its residual")
    p.add_argument("--type", required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--side", choices=["source", "target"], required=True)
    p.add_argument("--known", required=True, help="the known expansion")
    add_db(p); add_json(p)
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("interp", help="solve for a residual from model counts")
    p.add_argument("--type", required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--constraint", action="append", default=[],
                   metavar="MODEL=COUNT", help="may be repeated")
    add_db(p); add_json(p)
    p.set_defaults(fn=_cmd_interp)

    p = sub.add_parser("oracle", help="resultant double-point count for a curve")
    p.add_argument("--curve", required=True, help="e.g. 't^2, t^3'")
    add_json(p)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=["table1", "classical", "series", "properties"])
    add_json(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report: Report = args.fn(args)
    except (ModelError, SingTypeError, MissingResidual, OracleError, UsageError,
            InconsistentExtraction, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    report.elapsed_ms = (time.perf_counter() - started) * 1000.0
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.all_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
