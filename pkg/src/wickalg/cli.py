"""Command-line front end: evaluate expressions, run the identity suites,
print Green functions.

Exit codes: 0 success, 1 check failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import sys

from .checks import run_checks
from .config import ConfigError, load_config
from .expr import EvalEnv, EvalError, ExprSyntaxError, evaluate, format_value, parse_expr
from .series import green
from .tmaps import TContext


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wickalg",
        description="Exact symbolic engine for normal products, Wick contractions, "
        "time-ordered products and renormalisation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="path to a JSON config file")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p_eval.add_argument("expression")
    p_eval.add_argument(
        "--renormalised",
        action="store_true",
        help="use the renormalised time-ordering inside S(...) and green(...)",
    )

    p_check = sub.add_parser(
        "check", parents=[common], help="run every identity suite against the config"
    )
    p_check.add_argument("--max-grade", type=int, default=None)
    p_check.add_argument("--trials", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=None)

    p_green = sub.add_parser(
        "green", parents=[common], help="print a two-point Green function series"
    )
    p_green.add_argument("i", type=int)
    p_green.add_argument("j", type=int)
    p_green.add_argument("lagrangian", help="expression for the interaction element")
    p_green.add_argument("--order", type=int, default=2)
    p_green.add_argument("--renormalised", action="store_true")
    return parser


def _cmd_eval(args) -> int:
    config = load_config(args.config)
    env = EvalEnv(
        config.dimension,
        config.pairing,
        config.scheme,
        renormalised=args.renormalised,
    )
    node = parse_expr(args.expression)
    print(format_value(evaluate(node, env)))
    return 0


def _cmd_check(args) -> int:
    config = load_config(args.config)
    reports = run_checks(
        config, max_grade=args.max_grade, trials=args.trials, seed=args.seed
    )
    failures = 0
    for report in reports:
        if report.status == "ok":
            print(f"ok    {report.name}")
        elif report.status == "skip":
            print(f"skip  {report.name} ({report.detail})")
        else:
            failures += 1
            print(f"FAIL  {report.name}")
            print(f"      counterexample: {report.detail}")
    ran = sum(1 for r in reports if r.status != "skip")
    print(f"{ran - failures}/{ran} laws passed"
          + (f", {failures} FAILED" if failures else ""))
    return 1 if failures else 0


def _cmd_green(args) -> int:
    config = load_config(args.config)
    if args.order < 0:
        raise EvalError("--order must be >= 0")
    env = EvalEnv(config.dimension, config.pairing, config.scheme)
    if not (1 <= args.i <= config.dimension and 1 <= args.j <= config.dimension):
        raise EvalError(f"generator indices must lie in 1..{config.dimension}")
    node = parse_expr(args.lagrangian)
    u = evaluate(node, env)
    from .expr import _as_element

    try:
        ctx = TContext(config.pairing, config.scheme)
    except ValueError as exc:
        raise EvalError(str(exc)) from exc
    result = green(
        args.i, args.j, _as_element(u), ctx, args.order, renormalised=args.renormalised
    )
    for k, coeff in enumerate(result.coeffs):
        print(f"lambda^{k}: {coeff.scalar_part()}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "green":
            return _cmd_green(args)
        parser.error(f"unknown command {args.command!r}")
    except (ConfigError, ExprSyntaxError, EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
