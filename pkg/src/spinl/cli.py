"""Command-line front end.

Subcommands:

  table {1,2,3,4}     exact table regenerated from first principles, with a
                      numeric column (tables 2-4) using stored or fresh norms
  coeffs FORM         exact integer coefficient listings (delta, g20, rankin)
  verify              exact-vs-numeric verification report with exit status

Exit codes: 0 success, 1 verification failure, 2 usage error.  Data goes to
stdout (or --out), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .critical_values import (
    main_identity,
    projection_coeffs,
    rankin_g20_value,
    two_delta_product,
)
from .numeric_lfun import context, stored_norms, fresh_norms, verify_tables
from .qexp import delta_qexp, g20_qexp, rankin_coeffs

__all__ = ["main", "OutputRecord", "factor_integer", "factored_form"]


def factor_integer(n: int) -> List[tuple]:
    """Prime factorization by trial division as (prime, exponent) pairs.
    Table denominators are smooth, so this never works hard."""
    if n < 1:
        raise ValueError("need a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _factor_str(n: int) -> str:
    if n == 1:
        return "1"
    return "*".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in factor_integer(n)
    )


def factored_form(q: Fraction) -> str:
    """Prime-power rendering of a rational, e.g. -2^15/(3^2*5^2)."""
    sign = "-" if q < 0 else ""
    num = _factor_str(abs(q.numerator))
    if q.denominator == 1:
        return sign + num
    den = _factor_str(q.denominator)
    if "*" in den:
        den = f"({den})"
    return f"{sign}{num}/{den}"


@dataclass
class OutputRecord:
    s: int
    numerator: str
    denominator: str
    factored: str
    pi_exponent: int
    numeric: str
    part: Optional[str] = None  # table 1 carries two values per s

    def as_dict(self) -> dict:
        d = {
            "s": self.s,
            "numerator": self.numerator,
            "denominator": self.denominator,
            "factored": self.factored,
            "pi_exponent": self.pi_exponent,
            "numeric": self.numeric,
        }
        if self.part is not None:
            d["part"] = self.part
        return d


def _record(s, q: Fraction, pi_exp: int, numeric, part=None) -> OutputRecord:
    return OutputRecord(
        s=s,
        numerator=str(q.numerator),
        denominator=str(q.denominator),
        factored=factored_form(q),
        pi_exponent=pi_exp,
        numeric=numeric,
        part=part,
    )


def _numeric_str(ctx, value, digits: int) -> str:
    return ctx.nstr(value, digits, strip_zeros=False)


def _table_rows(which: int, prec: int, use_fresh: bool):
    ctx = context(prec + 5)
    show = prec
    rows: List[OutputRecord] = []
    dn, gn = (fresh_norms(prec + 5) if use_fresh else stored_norms(prec + 5))
    dn, gn = ctx.convert(dn), ctx.convert(gn)
    if which == 1:
        for s in range(3, 11):
            pc = projection_coeffs(s)
            for part, pv in (("A1", pc.a1), ("A2", pc.a2)):
                q, e = pv.as_monomial()
                num = ctx.mpf(q.numerator) / q.denominator * ctx.pi**e
                rows.append(_record(s, q, e, _numeric_str(ctx, num, show), part))
        return rows, dn, gn
    producer = {2: two_delta_product, 3: rankin_g20_value, 4: main_identity}[which]
    norm = {2: dn, 3: gn, 4: dn * gn}[which]
    for s in range(12, 20):
        res = producer(s)
        value = (
            ctx.mpf(res.rational.numerator)
            / res.rational.denominator
            * ctx.pi**res.pi_exponent
            * norm
        )
        rows.append(
            _record(s, res.rational, res.pi_exponent, _numeric_str(ctx, value, show))
        )
    return rows, dn, gn


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_table(which, rows, dn, gn, args) -> str:
    if args.format == "json":
        payload = {
            "table": which,
            "rows": [r.as_dict() for r in rows],
            "petersson": {"delta_delta": str(dn), "g20_g20": str(gn)},
            "precision_digits": args.prec,
            "coefficients_used": args.coeffs,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        fields = ["s", "part", "numerator", "denominator", "factored", "pi_exponent", "numeric"]
        if which != 1:
            fields.remove("part")
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: v for k, v in r.as_dict().items() if k in fields})
        return buf.getvalue()
    lines = [f"table {which}"]
    for r in rows:
        tag = f" {r.part}" if r.part else ""
        lines.append(
            f"s={r.s}{tag}  {r.numerator}/{r.denominator} = {r.factored}"
            f"  * pi^{r.pi_exponent}   numeric: {r.numeric}"
        )
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> int:
    rows, dn, gn = _table_rows(args.table, args.prec, args.fresh_norms)
    _emit(_render_table(args.table, rows, dn, gn, args), args.out)
    return 0


def _cmd_coeffs(args) -> int:
    n = args.nmax
    if args.form == "delta":
        values = delta_qexp(n).integer_coeffs()[1:]
    elif args.form == "g20":
        values = g20_qexp(n).integer_coeffs()[1:]
    else:
        A = rankin_coeffs(n)
        values = [A[i] for i in range(1, n + 1)]
    if args.format == "json":
        payload = {
            "form": args.form,
            "n_max": n,
            "values": [str(v) for v in values],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", args.form])
        for i, v in enumerate(values, start=1):
            writer.writerow([i, v])
        text = buf.getvalue()
    else:
        text = "\n".join(f"{i:4d}  {v}" for i, v in enumerate(values, start=1)) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    report = verify_tables(args.prec, args.coeffs, use_fresh_norms=args.fresh_norms)
    tol = context(args.prec).mpf(args.tol)
    bad = report.failures(tol)
    if args.format == "json":
        payload = report.as_dict()
        payload["tolerance"] = str(args.tol)
        payload["failures"] = len(bad)
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = [
            f"verification at {args.prec} digits, {args.coeffs} coefficients,"
            f" {'fresh' if args.fresh_norms else 'stored'} norms"
        ]
        for r in report.rows:
            lines.append(
                f"s={r.s} {r.branch:10s} exact*norms={r.exact_value}"
                f"  direct={r.direct_value}  rel_diff={r.rel_diff}"
            )
        lines.append(f"max relative difference: {report.max_rel_diff}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if bad:
        for r in bad:
            print(
                f"FAIL s={r.s} {r.branch}: rel diff {r.rel_diff} > {args.tol}",
                file=sys.stderr,
            )
        return 1
    return 0


def _add_common(parser, top: bool) -> None:
    # shared flags live on the top parser with real defaults and on each
    # subparser with SUPPRESS, so they are accepted on either side of the
    # subcommand without the subparser default clobbering an explicit value
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--prec", type=int, default=d(30), help="decimal digits (default 30)")
    parser.add_argument(
        "--coeffs", type=int, default=d(150), help="Dirichlet coefficients (default 150)"
    )
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default=d("text"), help="output format"
    )
    parser.add_argument("--tol", type=float, default=d(1e-9), help="verification tolerance")
    parser.add_argument("--out", default=d(None), help="write output to a file instead of stdout")
    kw = {"action": "store_true"} if top else {"action": "store_true", "default": argparse.SUPPRESS}
    parser.add_argument(
        "--fresh-norms",
        help="recompute Petersson norms at --prec instead of using stored constants",
        **kw,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinl",
        description=(
            "Exact critical values of the degree-3 weight-12 spinor L-function"
            " via its elliptic factorization, with numerical verification."
        ),
    )
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)
    p_table = sub.add_parser("table", help="emit one of the four exact tables")
    p_table.add_argument("table", type=int, choices=(1, 2, 3, 4))
    _add_common(p_table, top=False)
    p_coeffs = sub.add_parser("coeffs", help="exact coefficient listings")
    p_coeffs.add_argument("form", choices=("delta", "g20", "rankin"))
    p_coeffs.add_argument("--nmax", type=int, default=15, help="largest index (default 15)")
    _add_common(p_coeffs, top=False)
    p_verify = sub.add_parser("verify", help="run the exact-vs-numeric verification")
    _add_common(p_verify, top=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.prec < 15:
        print("--prec must be >= 15 digits", file=sys.stderr)
        return 2
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "coeffs":
            if args.nmax < 1:
                print("--nmax must be >= 1", file=sys.stderr)
                return 2
            return _cmd_coeffs(args)
        return _cmd_verify(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
