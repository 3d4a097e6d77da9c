"""Command-line front end.

Subcommands:

  table   grid of polynomial family values over index ranges
  eval    one family value
  series  coefficients of a truncated MGF or of the polynomial family's
          generating function at a point
  padic   apply one of the two integral operators to a small expression
  audit   run the identity registry and write the report

Every rational is parsed and printed exactly ("p/q", or "p" when the
denominator is 1); formal-log values print as polynomials in the symbol L.
No floating point exists on any input or output path, so identical
invocations produce byte-identical outputs.

Exit codes: 0 success, 1 computation precondition violated, 2 usage error,
3 I/O error.  ``audit`` also exits 1 when an expected-pass case fails.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import audit as audit_mod
from . import families, padic
from .distributions import (
    Bernoulli,
    Binomial,
    Constant,
    CustomMoments,
    Geometric,
    NegBinomial,
    Poisson,
    Uniform01,
)
from .qcalc import QPoint, bracket_in_t
from .rings import Laurent, LogPoly

DEFAULT_ORDER = 16


def default_order() -> int:
    raw = os.environ.get("QBERN_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
        if value < 0:
            raise ValueError
    except ValueError:
        raise SystemExit(f"QBERN_ORDER must be a nonnegative integer, got {raw!r}")
    return value


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def parse_range(text: str) -> range:
    """Either a single index "3" or an inclusive range "0..6"."""
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"not an index or range: {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return range(lo, hi + 1)


def render_rational(value: Fraction) -> str:
    return str(value)


def render_latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _add_dist_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--dist",
        choices=[
            "poisson", "bernoulli", "binomial", "geometric",
            "negbinomial", "uniform01", "constant", "custom",
        ],
    )
    parser.add_argument("--alpha", type=parse_rational)
    parser.add_argument("--p1", type=parse_rational)
    parser.add_argument("--nbar", type=int, help="binomial trial count")
    parser.add_argument("--a", type=int, help="negative-binomial success count")
    parser.add_argument("--value", type=parse_rational, help="constant law value")
    parser.add_argument(
        "--moments", help="comma-separated exact moments for the custom law"
    )


def _build_dist(args):
    name = args.dist
    if name is None:
        return None
    try:
        if name == "poisson":
            _require(args.alpha is not None, "--alpha is required for poisson")
            return Poisson(args.alpha)
        if name == "bernoulli":
            _require(args.p1 is not None, "--p1 is required for bernoulli")
            return Bernoulli(args.p1)
        if name == "binomial":
            _require(
                args.nbar is not None and args.p1 is not None,
                "--nbar and --p1 are required for binomial",
            )
            return Binomial(args.nbar, args.p1)
        if name == "geometric":
            _require(args.p1 is not None, "--p1 is required for geometric")
            return Geometric(args.p1)
        if name == "negbinomial":
            _require(
                args.a is not None and args.p1 is not None,
                "--a and --p1 are required for negbinomial",
            )
            return NegBinomial(args.a, args.p1)
        if name == "uniform01":
            return Uniform01()
        if name == "constant":
            _require(args.value is not None, "--value is required for constant")
            return Constant(args.value)
        _require(args.moments is not None, "--moments is required for custom")
        return CustomMoments(tuple(Fraction(p) for p in args.moments.split(",")))
    except ValueError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


class ComputationError(Exception):
    pass


def _require(condition: bool, message: str):
    if not condition:
        raise UsageError(message)


def _add_point_args(parser: argparse.ArgumentParser):
    parser.add_argument("--rho", type=parse_rational, help="base of the point grid")
    parser.add_argument("--c", type=int, help="t = rho**c")
    parser.add_argument("--d", type=int, help="q = rho**d")
    parser.add_argument(
        "--x", type=parse_rational, help="classical-mode argument (q = 1)"
    )


def _build_point(args) -> QPoint:
    if args.x is not None:
        _require(
            args.rho is None and args.c is None and args.d is None,
            "give either --x or (--rho, --c, --d), not both",
        )
        return QPoint.classical(args.x)
    _require(
        args.rho is not None and args.c is not None and args.d is not None,
        "an evaluation point needs --rho, --c and --d (or classical --x)",
    )
    try:
        return QPoint(args.rho, args.c, args.d)
    except ValueError as exc:
        raise UsageError(str(exc))


def _open_out(path):
    if path is None:
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise IOFailure(str(exc))


class IOFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# subcommands

def cmd_table(args) -> int:
    dist = _build_dist(args) or Constant(Fraction(1))
    point = _build_point(args)
    rows = []
    for n in args.n:
        for r in args.r:
            if r > n:
                continue
            rows.append((n, r, families.prob_qbernstein(dist, r, n, point)))
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            import csv

            writer = csv.writer(out)
            writer.writerow(["n", "r", "value"])
            for n, r, v in rows:
                writer.writerow([n, r, render_rational(v)])
        elif args.format == "json-lines":
            for n, r, v in rows:
                out.write(
                    json.dumps(
                        {"n": n, "r": r, "value": render_rational(v)},
                        separators=(",", ":"),
                    )
                    + "\n"
                )
        else:  # latex
            out.write("\\begin{tabular}{rrl}\n")
            out.write("$n$ & $r$ & $B^{Y}_{r,n}(x,q)$ \\\\\n\\hline\n")
            for n, r, v in rows:
                out.write(f"{n} & {r} & ${render_latex_rational(v)}$ \\\\\n")
            out.write("\\end{tabular}\n")
    finally:
        if close:
            out.close()
    return 0


_EVAL_FAMILIES = [
    "qbernstein", "prob-qbernstein", "bernstein", "stirling2", "prob-stirling2",
    "bell", "euler", "higher-bernoulli", "frobenius-euler", "prob-euler",
    "prob-bernoulli", "prob-bernoulli-higher", "carlitz-beta", "q-euler",
]


def cmd_eval(args) -> int:
    fam = args.family
    dist = _build_dist(args)

    def need_dist():
        _require(dist is not None, f"--dist is required for family {fam}")
        return dist

    def need(value, flag):
        _require(value is not None, f"{flag} is required for family {fam}")
        return value

    try:
        if fam == "qbernstein":
            value = families.qbernstein(need(args.r, "--r"), need(args.n, "--n"), _build_point(args))
        elif fam == "prob-qbernstein":
            value = families.prob_qbernstein(
                need_dist(), need(args.r, "--r"), need(args.n, "--n"), _build_point(args)
            )
        elif fam == "bernstein":
            value = families.bernstein_classical(
                need(args.r, "--r"), need(args.n, "--n"), need(args.x, "--x")
            )
        elif fam == "stirling2":
            value = families.stirling2(need(args.n, "--n"), need(args.m, "--m"))
        elif fam == "prob-stirling2":
            value = families.prob_stirling2(
                need_dist(), need(args.n, "--n"), need(args.m, "--m")
            )
        elif fam == "bell":
            value = families.bell_poly(need(args.n, "--n"), need(args.arg, "--arg"))
        elif fam == "euler":
            value = families.euler_poly(need(args.n, "--n"), need(args.arg, "--arg"))
        elif fam == "higher-bernoulli":
            value = families.higher_bernoulli(
                need(args.n, "--n"), need(args.order_param, "--order-param"),
                need(args.arg, "--arg"),
            )
        elif fam == "frobenius-euler":
            value = families.frobenius_euler(
                need(args.n, "--n"), need(args.order_param, "--order-param"),
                need(args.arg, "--arg"), need(args.u, "--u"),
            )
        elif fam == "prob-euler":
            value = families.prob_euler(
                need_dist(), need(args.n, "--n"), need(args.arg, "--arg")
            )
        elif fam == "prob-bernoulli":
            value = families.prob_bernoulli(
                need_dist(), need(args.n, "--n"), need(args.arg, "--arg")
            )
        elif fam == "prob-bernoulli-higher":
            value = families.prob_bernoulli_higher(
                need_dist(), need(args.n, "--n"), need(args.r, "--r"),
                need(args.arg, "--arg"),
            )
        elif fam == "carlitz-beta":
            value = padic.carlitz_beta(need(args.r, "--r"), need(args.q, "--q"))
        else:  # q-euler
            value = padic.q_euler(need(args.r, "--r"), need(args.q, "--q"))
    except ValueError as exc:
        raise ComputationError(f"{fam}: {exc}")
    print(value)
    return 0


def cmd_series(args) -> int:
    dist = _build_dist(args)
    _require(dist is not None, "--dist is required")
    order = args.order if args.order is not None else default_order()
    try:
        if args.kind == "mgf":
            s = dist.mgf_series(order)
        elif args.kind == "log-mgf":
            s = dist.mgf_series(order).log()
        else:  # qbernstein-gf
            _require(args.r is not None, "--r is required for the qbernstein-gf kind")
            point = _build_point(args)
            from .qcalc import bracket, bracket_conjugates
            from .series import Series
            import math as _math

            x_val = bracket(point)
            one_minus = bracket_conjugates(point)[1]
            s = Series.monomial(
                args.r, x_val**args.r * Fraction(1, _math.factorial(args.r)), order
            ) * dist.mgf_series(order).pow(one_minus)
    except ValueError as exc:
        raise ComputationError(str(exc))
    out, close = _open_out(args.out)
    try:
        if args.format == "json-lines":
            for n, coeff in enumerate(s.coeffs):
                out.write(
                    json.dumps(
                        {
                            "n": n,
                            "coeff": render_rational(coeff),
                            "egf": render_rational(s.egf_coeff(n)),
                        },
                        separators=(",", ":"),
                    )
                    + "\n"
                )
        else:
            import csv

            writer = csv.writer(out)
            writer.writerow(["n", "coeff", "egf"])
            for n, coeff in enumerate(s.coeffs):
                writer.writerow(
                    [n, render_rational(coeff), render_rational(s.egf_coeff(n))]
                )
    finally:
        if close:
            out.close()
    return 0


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?:(?P<sym>t|\[x\])(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_padic_expr(text: str, q: Fraction) -> Laurent:
    """Sums of c*t^b and c*[x]^r tokens, with optional rational coefficients."""
    result = Laurent()
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise UsageError(f"cannot parse expression near {text[pos:]!r}")
        sign, coef, sym, exp = m.group("sign", "coef", "sym", "exp")
        if sign is None and not first:
            raise UsageError(f"missing +/- before {text[pos:]!r}")
        if coef is None and sym is None:
            raise UsageError(f"empty term near position {pos} in {text!r}")
        coefficient = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            coefficient = -coefficient
        power = int(exp) if exp is not None else (1 if sym else 0)
        if sym == "t":
            term = Laurent({power: coefficient})
        elif sym == "[x]":
            if power < 0:
                raise UsageError("bracket powers must be nonnegative")
            term = coefficient * bracket_in_t(q) ** power
        else:
            term = Laurent({0: coefficient})
        result = result + term
        pos = m.end()
        first = False
    return result


def cmd_padic(args) -> int:
    try:
        expr = parse_padic_expr(args.expr, args.q)
        if args.op == "volkenborn":
            value = padic.volkenborn(expr, args.q)
        else:
            value = padic.fermionic(expr, args.q)
    except ValueError as exc:
        raise ComputationError(str(exc))
    print(value)
    return 0


def cmd_audit(args) -> int:
    order = args.order if args.order is not None else default_order()
    report = audit_mod.run_all(seed=args.seed, trials=args.trials, order=order)
    if args.format == "json-lines":
        payload = report.to_jsonl()
    elif args.format == "csv":
        payload = report.to_csv()
    else:
        payload = report.to_latex()
    if args.out is None:
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(payload)
        except OSError as exc:
            raise IOFailure(str(exc))
        for line in report.summary_lines():
            print(line)
    failures = report.expected_pass_failures()
    if failures:
        print(f"{len(failures)} expected-pass record(s) failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbernstein",
        description="Exact computation and identity auditing for probabilistic "
        "q-Bernstein polynomials and their relatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="tabulate family values over index ranges")
    _add_dist_args(p_table)
    _add_point_args(p_table)
    p_table.add_argument("--n", type=parse_range, required=True)
    p_table.add_argument("--r", type=parse_range, required=True)
    p_table.add_argument(
        "--format", choices=["csv", "json-lines", "latex"], default="csv"
    )
    p_table.add_argument("--out")
    p_table.set_defaults(func=cmd_table)

    p_eval = sub.add_parser("eval", help="print one family value")
    p_eval.add_argument("--family", choices=_EVAL_FAMILIES, required=True)
    _add_dist_args(p_eval)
    _add_point_args(p_eval)
    p_eval.add_argument("--r", type=int)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--m", type=int)
    p_eval.add_argument("--q", type=parse_rational)
    p_eval.add_argument("--u", type=parse_rational)
    p_eval.add_argument("--arg", type=parse_rational, help="polynomial argument")
    p_eval.add_argument(
        "--order-param", type=parse_rational, help="family order parameter"
    )
    p_eval.set_defaults(func=cmd_eval)

    p_series = sub.add_parser("series", help="dump truncated series coefficients")
    _add_dist_args(p_series)
    _add_point_args(p_series)
    p_series.add_argument(
        "--kind", choices=["mgf", "log-mgf", "qbernstein-gf"], default="mgf"
    )
    p_series.add_argument("--r", type=int)
    p_series.add_argument("--order", type=int)
    p_series.add_argument("--format", choices=["csv", "json-lines"], default="csv")
    p_series.add_argument("--out")
    p_series.set_defaults(func=cmd_series)

    p_padic = sub.add_parser("padic", help="apply an integral operator")
    p_padic.add_argument(
        "--op", choices=["volkenborn", "fermionic"], required=True
    )
    p_padic.add_argument("--q", type=parse_rational, required=True)
    p_padic.add_argument(
        "--expr", required=True,
        help="sum of c*t^b and c*[x]^r terms, e.g. '3*t^2 - [x]^1 + 1/2'",
    )
    p_padic.set_defaults(func=cmd_padic)

    p_audit = sub.add_parser("audit", help="run the identity registry")
    p_audit.add_argument("--seed", type=int, default=42)
    p_audit.add_argument("--trials", type=int, default=5)
    p_audit.add_argument("--order", type=int)
    p_audit.add_argument(
        "--format", choices=["json-lines", "csv", "latex"], default="json-lines"
    )
    p_audit.add_argument("--out")
    p_audit.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"error: {exc}\n")
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except IOFailure as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
