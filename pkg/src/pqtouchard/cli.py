"""Command-line surface.

Exit codes: 0 success, 1 a requested verification failed, 2 usage or
input error.  All output is deterministic: same argv, same bytes.
Setting the environment variable PQTOUCHARD_CACHE_DIR persists the
integer tables between runs in <dir>/tables.json.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import partitions, permstats, touchard
from .partitions import nsb, nse
from .poly import VAR_ORDER
from .tables import (
    TABLES,
    bell,
    binomial,
    factorial,
    q_product_poly,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

CACHE_ENV = "PQTOUCHARD_CACHE_DIR"

_TRIANGLES = {
    "binomial": binomial,
    "stirling2": stirling2,
    "stirling1": stirling1_unsigned,
    "stirling1-signed": stirling1_signed,
}
_SEQUENCES = {"bell": bell, "factorial": factorial}


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as an exact rational") from exc


def _parse_assignment(text: str) -> dict[str, Fraction]:
    point = {}
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        name = name.strip()
        if not sep or name not in VAR_ORDER:
            raise ValueError(
                f"bad assignment {piece!r}: expected var=value with var "
                f"in {', '.join(VAR_ORDER)}"
            )
        point[name] = _parse_fraction(value.strip())
    return point


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def _cmd_table(args, out) -> int:
    if args.nmax < 0:
        raise ValueError("--nmax must be nonnegative")
    name = args.name
    if name in _TRIANGLES:
        fn = _TRIANGLES[name]
        rows = [[fn(n, k) for k in range(n + 1)] for n in range(args.nmax + 1)]
        if args.format == "json":
            payload = {
                "name": name,
                "nmax": args.nmax,
                "rows": [[str(v) for v in row] for row in rows],
            }
            print(json.dumps(payload, indent=2), file=out)
        elif args.format == "csv":
            w = _writer(out)
            for row in rows:
                w.writerow(row)
        else:
            for row in rows:
                print(" ".join(str(v) for v in row), file=out)
    elif name in _SEQUENCES:
        fn = _SEQUENCES[name]
        values = [fn(n) for n in range(args.nmax + 1)]
        if args.format == "json":
            payload = {"name": name, "nmax": args.nmax, "values": [str(v) for v in values]}
            print(json.dumps(payload, indent=2), file=out)
        elif args.format == "csv":
            w = _writer(out)
            w.writerow(["n", "value"])
            for n, v in enumerate(values):
                w.writerow([n, v])
        else:
            for v in values:
                print(v, file=out)
    else:
        polys = [q_product_poly(n, args.var) for n in range(args.nmax + 1)]
        if args.format == "json":
            payload = {
                "name": name,
                "var": args.var,
                "nmax": args.nmax,
                "polys": [p.to_json_obj() for p in polys],
            }
            print(json.dumps(payload, indent=2), file=out)
        elif args.format == "csv":
            w = _writer(out)
            w.writerow(["n", "poly"])
            for n, p in enumerate(polys):
                w.writerow([n, str(p)])
        else:
            for p in polys:
                print(p, file=out)
    return 0


def _cmd_expand(args, out) -> int:
    poly = touchard.touchard_poly(args.n, args.route)
    if args.at is not None:
        point = _parse_assignment(args.at)
        value = poly.evaluate(point)
        if args.format == "json":
            payload = {
                "n": args.n,
                "route": args.route,
                "at": {k: str(v) for k, v in point.items()},
                "value": str(value),
            }
            print(json.dumps(payload, indent=2), file=out)
        elif args.format == "csv":
            w = _writer(out)
            w.writerow(["value"])
            w.writerow([str(value)])
        else:
            print(value, file=out)
        return 0
    if args.format == "json":
        payload = {"n": args.n, "route": args.route, "poly": poly.to_json_obj()}
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        w.writerow(list(poly.variables) + ["coeff"])
        for exps, coeff in poly.sorted_terms():
            w.writerow(list(exps) + [str(coeff)])
    else:
        print(poly, file=out)
    return 0


def _cmd_eval(args, out) -> int:
    x = _parse_fraction(args.x)
    p = _parse_fraction(args.p)
    q = _parse_fraction(args.q)
    value = touchard.touchard_eval(args.n, x, p, q)
    oracle_value = None
    status = 0
    if args.oracle:
        coeffs = touchard.taylor_oracle(x, p, q, args.n)
        oracle_value = coeffs[args.n] * factorial(args.n)
        if oracle_value != value:
            status = 1
    if args.format == "json":
        payload = {
            "n": args.n,
            "x": str(x),
            "p": str(p),
            "q": str(q),
            "value": str(value),
        }
        if args.oracle:
            payload["oracle"] = str(oracle_value)
            payload["equal"] = oracle_value == value
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        header = ["n", "x", "p", "q", "value"]
        row = [args.n, x, p, q, value]
        if args.oracle:
            header += ["oracle", "equal"]
            row += [oracle_value, oracle_value == value]
        w.writerow(header)
        w.writerow(row)
    else:
        print(value, file=out)
        if args.oracle:
            print(f"oracle {oracle_value}", file=out)
            print("EQUAL" if status == 0 else "MISMATCH", file=out)
    return status


def _cmd_enumerate(args, out) -> int:
    stream = partitions.enumerate_partitions(args.n, args.k, args.flavor, force=args.force)
    if args.format == "json":
        items = []
        for pi in stream:
            item = {"partition": pi.to_string()}
            if args.stats:
                item["nsb"] = nsb(pi)
                item["nse"] = nse(pi)
            items.append(item)
        print(json.dumps(items, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        w.writerow(["partition", "nsb", "nse"] if args.stats else ["partition"])
        for pi in stream:
            if args.stats:
                w.writerow([pi.to_string(), nsb(pi), nse(pi)])
            else:
                w.writerow([pi.to_string()])
    else:
        for pi in stream:
            if args.stats:
                print(f"{pi.to_string()} {nsb(pi)} {nse(pi)}", file=out)
            else:
                print(pi.to_string(), file=out)
    return 0


def _dist_grid_rows(n, k, poly):
    cols = range(max(k, 1))
    rows = [["v\\u"] + [str(i) for i in cols]]
    for j in range(max(n - k, 0) + 1):
        rows.append(
            [str(j)] + [str(poly.monomial_coefficient({"u": i, "v": j})) for i in cols]
        )
    return rows


def _cmd_dist(args, out) -> int:
    formula = touchard.s_uv(args.n, args.k)
    report = None
    status = 0
    if args.oracle:
        report = touchard.stat_report(args.n, args.k, force=args.force)
        if not report.passed:
            status = 1
    if args.format == "csv":
        w = _writer(out)
        for row in _dist_grid_rows(args.n, args.k, formula):
            w.writerow(row)
        if report is not None and not report.passed:
            failed = ", ".join(name for name, ok in report.checks if not ok)
            print(f"verification failed: {failed}", file=sys.stderr)
    elif args.format == "json":
        payload = {"n": args.n, "k": args.k, "poly": formula.to_json_obj()}
        if report is not None:
            payload["enumeration"] = report.poly.to_json_obj()
            payload["cardinality"] = str(report.cardinality)
            payload["checks"] = {name: ok for name, ok in report.checks}
            payload["passed"] = report.passed
        print(json.dumps(payload, indent=2), file=out)
    else:
        if report is None:
            print(formula, file=out)
        else:
            print(f"formula      {formula}", file=out)
            print(f"enumeration  {report.poly}", file=out)
            print(f"cardinality  {report.cardinality}", file=out)
            if report.passed:
                print("EQUAL", file=out)
            else:
                failed = ", ".join(name for name, ok in report.checks if not ok)
                print(f"MISMATCH ({failed})", file=out)
    return status


def _cmd_verify(args, out) -> int:
    if args.identity == "all":
        names = touchard.IDENTITY_NAMES
        n_max = None
    else:
        names = (args.identity,)
        n_max = args.nmax
    reports = [touchard.verify_identity(name, n_max, force=args.force) for name in names]
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        payload = {
            "reports": [
                {
                    "identity": r.identity,
                    "nmax": r.n_max,
                    "cells": len(r.cells),
                    "failures": r.failures,
                    "passed": r.passed,
                    "first_counterexample": r.first_counterexample,
                }
                for r in reports
            ]
        }
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        w.writerow(["identity", "nmax", "cells", "failures", "passed"])
        for r in reports:
            w.writerow([r.identity, r.n_max, len(r.cells), r.failures, r.passed])
    else:
        for r in reports:
            print(r.summary(), file=out)
    return status


def _cmd_avg_nse(args, out) -> int:
    value = touchard.avg_nse(args.n)
    brute = None
    status = 0
    if args.check:
        moved = 0
        objects = 0
        for k in range(1, args.n + 1):
            for pi in partitions.enumerate_partitions(args.n, k, "slp"):
                moved += nse(pi)
                objects += 1
        brute = Fraction(moved, objects)
        if brute != value:
            status = 1
    if args.format == "json":
        payload = {"n": args.n, "value": str(value)}
        if args.check:
            payload["enumeration"] = str(brute)
            payload["equal"] = brute == value
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        header = ["n", "value"]
        row = [args.n, value]
        if args.check:
            header += ["enumeration", "equal"]
            row += [brute, brute == value]
        w.writerow(header)
        w.writerow(row)
    else:
        print(value, file=out)
        if args.check:
            print(f"enumeration {brute}", file=out)
            print("EQUAL" if status == 0 else "MISMATCH", file=out)
    return status


def _cmd_perm_stats(args, out) -> int:
    nse_counts = permstats.nse_distribution(args.n)
    ltr_counts = permstats.ltr_max_distribution(args.n)
    rows = [
        (j, nse_counts[j], args.n - j, ltr_counts[args.n - j]) for j in range(args.n)
    ]
    if args.format == "json":
        payload = {"n": args.n, "nse": nse_counts, "ltr_max": ltr_counts}
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        w = _writer(out)
        w.writerow(["j", "nse_count", "k", "ltrmax_count"])
        for row in rows:
            w.writerow(row)
    else:
        print("j nse_count k ltrmax_count", file=out)
        for row in rows:
            print(" ".join(str(v) for v in row), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqtouchard",
        description="Exact deformed Touchard polynomials and partition statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, handler):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format", choices=("plain", "json", "csv"), default="plain",
            help="output format (default plain)",
        )
        p.add_argument("--out", metavar="PATH", help="write output to this file")
        p.set_defaults(handler=handler)
        return p

    p = add("table", "print a number table", _cmd_table)
    p.add_argument(
        "--name", required=True,
        choices=tuple(_TRIANGLES) + tuple(_SEQUENCES) + ("q-product",),
    )
    p.add_argument("--nmax", type=int, required=True, help="last row to print")
    p.add_argument(
        "--var", choices=("p", "q"), default="q",
        help="variable of the q-product polynomials",
    )

    p = add("expand", "print T_n(x;p,q)", _cmd_expand)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--route", choices=touchard.ROUTES, default="substitution",
        help="computation route (all agree)",
    )
    p.add_argument(
        "--at", metavar="ASSIGN",
        help="evaluate at e.g. x=1/2,p=2,q=3 instead of printing the polynomial",
    )

    p = add("eval", "evaluate T_n at a rational point", _cmd_eval)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument(
        "--oracle", action="store_true",
        help="cross-check against the series oracle (needs p != 1 and q != 1)",
    )

    p = add("enumerate", "list all partitions of one flavor", _cmd_enumerate)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--flavor", required=True, choices=partitions.FLAVORS)
    p.add_argument("--stats", action="store_true", help="append nsb and nse columns")
    p.add_argument(
        "--force", action="store_true",
        help="lift the lists-of-lists enumeration budget",
    )

    p = add("dist", "joint nsb/nse distribution polynomial", _cmd_dist)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--oracle", action="store_true",
        help="also enumerate and compare against the closed form",
    )
    p.add_argument(
        "--force", action="store_true",
        help="lift the lists-of-lists enumeration budget",
    )

    p = add("verify", "check a named identity cell by cell", _cmd_verify)
    p.add_argument(
        "--identity", required=True,
        choices=touchard.IDENTITY_NAMES + ("all",),
    )
    p.add_argument(
        "--nmax", type=int,
        help="check cells up to this n (default: per-identity budget; "
        "ignored with --identity all)",
    )
    p.add_argument(
        "--force", action="store_true",
        help="lift the lists-of-lists enumeration budget",
    )

    p = add("avg-nse", "average nse over all sets-of-lists of [n]", _cmd_avg_nse)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--check", action="store_true",
        help="cross-check the formula by full enumeration",
    )

    p = add(
        "perm-stats",
        "nse and left-to-right-maxima distributions over S_n",
        _cmd_perm_stats,
    )
    p.add_argument("--n", type=int, required=True)

    return parser


def _cache_file() -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / "tables.json"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse handles --help (0) and usage errors (2) itself
        return int(exc.code or 0)
    cache_file = _cache_file()
    if cache_file is not None:
        TABLES.load(cache_file)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                status = args.handler(args, handle)
        else:
            status = args.handler(args, sys.stdout)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache_file is not None and status == 0:
        try:
            cache_file.parent.mkdir(parents=True, exist_ok=True)
            TABLES.save(cache_file)
        except OSError as exc:
            print(f"warning: could not write table cache: {exc}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
