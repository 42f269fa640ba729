"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import exact, landen_numeric as ln, landen_symbolic as ls
from .errors import DomainError, LandenError
from .poly import Poly, RationalFunction, as_exact, format_fraction
from .quadrature import quartic_by_quadrature
from .report import RunReport
from .verify import run_suite

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


def _exact_or_float(text: str):
    """Parse ``"3"``, ``"1/2"`` exactly; anything else as a float."""
    try:
        return as_exact(text)
    except ValueError:
        return float(text)


def cmd_quartic(args) -> RunReport:
    a, m = args.a, args.m
    inputs = {"a": format_fraction(a) if not isinstance(a, float) else a, "m": m, "method": args.method}
    details = {}
    af = float(a)
    if args.method == "closed":
        exact_value = None if args.float else exact.quartic_exact(a, m)
        value = str(exact_value) if exact_value is not None else exact.quartic_value(af, m)
        details["P"] = [format_fraction(c) for c in exact.poly_P(m).coeffs]
    elif args.method == "hyper":
        value = exact.quartic_via_2f1(af, m)
    elif args.method == "landen":
        value = ls.quartic_via_landen(af, m)
        details["Q1"] = ls.quartic_Q1(as_exact(a), m).format("y")
    else:
        if af <= -1:
            raise DomainError(f"the quartic integral needs a > -1, got a={a}")
        value = quartic_by_quadrature(af, m)
    return RunReport("quartic", inputs, value, details=details)


def cmd_table(args) -> RunReport:
    if args.m_max < 0:
        raise DomainError("--m-max must be nonnegative")
    rows = []
    for m in range(args.m_max + 1):
        for l in range(m + 1):
            d = exact.d_coeff(m, l)
            rows.append({"m": m, "l": l, "d": float(d) if args.float else format_fraction(d)})
    return RunReport("table", {"mMax": args.m_max}, None, table=rows)


_ARITY = {"quad2": 3, "deg6": 5, "agm": 2}


def cmd_landen(args) -> RunReport:
    params = args.params
    need = _ARITY[args.variant]
    if len(params) != need:
        raise DomainError(f"variant {args.variant} takes {need} parameters, got {len(params)}")
    inputs = {"variant": args.variant, "params": params, "tol": args.tol}
    if args.variant == "quad2":
        value, trace = ln.landen_iterate2(*params, tol=args.tol)
    elif args.variant == "deg6":
        inputs["printedDMap"] = args.printed_d_map
        value, trace = ln.landen_iterate6(*params, tol=args.tol, printed_d_map=args.printed_d_map)
    else:
        pairs = ln.agm_sequence(*params, tol=args.tol)
        x, y = pairs[-1]
        value = (x + y) / 2
        errors = [abs(p - q) for p, q in pairs]
        trace = ln.ConvergenceReport(
            iterations=len(pairs) - 1,
            error_trace=errors,
            estimated_order=ln.order_or_none(errors, 4 * 2.2e-16 * value),
            final_value=value,
            converged=True,
        )
    return RunReport("landen", inputs, value, trace=trace)


def cmd_verify(args) -> RunReport:
    checks = run_suite(args.suite)
    return RunReport("verify", {"suite": args.suite}, None, checks=checks)


def _parse_poly(text: str) -> Poly:
    return Poly(as_exact(t) for t in text.split(","))


def cmd_transform(args) -> RunReport:
    if args.num is not None or args.den is not None:
        f = RationalFunction(_parse_poly(args.num or "1"), _parse_poly(args.den or "1"))
        inputs = {"f": f.format("x")}
    else:
        f = ls.quartic_Q(args.a, args.m)
        inputs = {"a": format_fraction(as_exact(args.a)), "m": args.m}
    g = ls.landen_transform_general(f) if args.general else ls.landen_transform(f)
    return RunReport("transform", inputs, g.format("y"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="landen-quartic",
        description="Evaluate the quartic integral and related rational integrals by several routes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--float", action="store_true", help="render exact values as floats")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quartic", parents=[common], help="value of int_0^oo dx/(x^4+2ax^2+1)^(m+1)")
    q.add_argument("--a", type=_exact_or_float, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--method", choices=("closed", "hyper", "landen", "quadrature"), default="closed")
    q.set_defaults(func=cmd_quartic)

    t = sub.add_parser("table", parents=[common], help="coefficients d_l(m) for 0 <= l <= m <= m-max")
    t.add_argument("--m-max", type=int, default=5)
    t.set_defaults(func=cmd_table)

    la = sub.add_parser("landen", parents=[common], help="run an iterative Landen/AGM scheme")
    la.add_argument("--variant", choices=("quad2", "deg6", "agm"), required=True)
    la.add_argument("params", nargs="+", type=float)
    la.add_argument("--tol", type=float, default=1e-12)
    la.add_argument("--printed-d-map", action="store_true",
                    help="use the uncorrected c(b+2) d-update (for the negative test)")
    la.set_defaults(func=cmd_landen)

    v = sub.add_parser("verify", parents=[common], help="run a property suite")
    v.add_argument("--suite", choices=("identities", "convergence", "landen-symbolic", "all"), default="all")
    v.set_defaults(func=cmd_verify)

    tr = sub.add_parser("transform", parents=[common], help="print the Landen image of a rational function")
    tr.add_argument("--num", help="ascending coefficients, comma separated, e.g. 1,0,3")
    tr.add_argument("--den", help="ascending coefficients, comma separated")
    tr.add_argument("--a", type=as_exact, default=Fraction(1))
    tr.add_argument("--m", type=int, default=0)
    tr.add_argument("--general", action="store_true", help="whole-line transform without evenness check")
    tr.set_defaults(func=cmd_transform)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (LandenError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.no_timestamp:
        report.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_csv())
    return EXIT_OK if report.all_passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
