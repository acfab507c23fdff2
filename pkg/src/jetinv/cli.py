"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 usage/parse error,
3 dimension table failed the counting-inequality audit.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from .calculus import OrderError, prolong
from .invariants import (
    InequalityWarning, dimension_report, is_invariant, iterate_diff_op, search_invariants,
)
from .jetspace import JetSpace, expr_order
from .parsing import GroupFileError, ParseError, load_group, parse_expr

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_FLAGGED = 0, 1, 2, 3

DIFFOP_PARSE_ORDER = 20


class UsageError(Exception):
    pass


def _space(basis, n):
    return JetSpace(basis.p, basis.q, n)


def _parse(text, space, what):
    try:
        return parse_expr(text, space)
    except ParseError as exc:
        raise UsageError(f"{what}: {exc}") from None


def cmd_dims(args, out):
    basis = load_group(args.group)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", InequalityWarning)
        report = dimension_report(basis, args.max_order, samples=args.samples, seed=args.seed,
                                  allow_large=args.allow_large)
    if args.format == "json":
        print(json.dumps(report.as_json()), file=out)
    else:
        print(report.format_table(), file=out)
    for msg in report.flags:
        print(f"FLAG {msg}", file=sys.stderr)
    if report.unstable:
        print(f"warning: sample ranks disagree at n = {report.unstable}", file=sys.stderr)
    return EXIT_FLAGGED if report.flags else EXIT_OK


def cmd_prolong(args, out):
    basis = load_group(args.group)
    if not 1 <= args.gen <= basis.group_dim:
        raise UsageError(f"--gen must lie in 1..{basis.group_dim}")
    w = prolong(basis.generators[args.gen - 1], args.order)
    print(f"{basis.name} generator {args.gen}, prolonged to order {args.order}:", file=out)
    for var, c in w.coeffs.items():
        print(f"  {var}: {c}", file=out)
    return EXIT_OK


def cmd_check(args, out):
    basis = load_group(args.group)
    I = _parse(args.invariant, _space(basis, args.order), "--invariant")
    verdict = is_invariant(basis, args.order, I)
    for k, (res, ok) in enumerate(zip(verdict.residuals, verdict.annihilated), start=1):
        print(f"  v{k}: {'0' if ok else res}", file=out)
    print("invariant" if verdict else "NOT invariant", file=out)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_diffop(args, out):
    basis = load_group(args.group)
    space = _space(basis, args.order)
    I = _parse(args.I, space, "--I")
    J = _parse(args.J, space, "--J")
    try:
        chain = [I, J] + iterate_diff_op(I, J, args.iterate)
    except ZeroDivisionError as exc:
        raise UsageError(str(exc)) from None
    labels = ["I", "J"] + [f"D^{k}J" for k in range(1, args.iterate + 1)]
    status = EXIT_OK
    for label, e in zip(labels, chain):
        n = expr_order(e)
        ok = bool(is_invariant(basis, n, e))
        print(f"{label} (order {n}, {'invariant' if ok else 'NOT invariant'}): {e}", file=out)
        if not ok:
            status = EXIT_NEGATIVE
    return status


def cmd_search(args, out):
    basis = load_group(args.group)
    space = _space(basis, args.order)
    denom = _parse(args.denom, space, "--denom")
    try:
        found = search_invariants(basis, args.order, denom, args.max_degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"{len(found)} independent solution(s)", file=out)
    status = EXIT_OK
    for e in found:
        ok = bool(is_invariant(basis, args.order, e))
        print(f"  {e}" + ("" if ok else "   [verification FAILED]"), file=out)
        if not ok:
            status = EXIT_NEGATIVE
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jetinv", description="Differential invariants of prolonged Lie group actions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", required=True, help="preset name (sl2, sl3, trivial) or group file")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dims", help="generic orbit dimensions and invariant counts")
    common(p)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-large", action="store_true", help="lift the order cap for large algebras")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("prolong", help="print a prolonged generator")
    common(p)
    p.add_argument("--gen", type=int, required=True, help="1-based generator index")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_prolong)

    p = sub.add_parser("check", help="test a candidate invariant")
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--invariant", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("diffop", help="iterate the invariant differential operator d/dI on J")
    common(p)
    p.add_argument("--I", dest="I", required=True)
    p.add_argument("--J", dest="J", required=True)
    p.add_argument("--iterate", type=int, default=1)
    p.add_argument("--order", type=int, default=DIFFOP_PARSE_ORDER, help="highest order accepted in I and J")
    p.set_defaults(func=cmd_diffop)

    p = sub.add_parser("search", help="ansatz search for invariants P/m")
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--denom", default="1", help="denominator monomial m")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, GroupFileError, FileNotFoundError, KeyError, OrderError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
