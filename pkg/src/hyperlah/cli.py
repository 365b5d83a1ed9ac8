"""Command-line interface: polynomials, tables, and cross-check suites.

Output is byte-deterministic for fixed flags.  JSON payloads keep every
rational exact as a string 'p/q' ('p' when integral); CSV tables leave
cells outside the support region empty.  Exit codes: 0 success, 1 a
cross-check identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crosscheck
from .ehrhart import EHRHART_METHODS, ehrhart_polynomial
from .errors import CapacityError
from .polynomial import rational_str
from .weighted_lah import WLAH_METHODS, wlah, wlah_table

__all__ = ["main"]

_FORMATS = ("text", "csv", "json")

# CLI spellings use dashes; the library uses underscores
_WLAH_CLI_METHODS = tuple(m.replace("_", "-") for m in WLAH_METHODS)


def _render_polynomial(result, fmt: str) -> str:
    poly = result.poly
    if fmt == "text":
        return poly.as_text("t")
    if fmt == "csv":
        lines = ["degree,coeff"]
        lines += [f"{i},{rational_str(c)}" for i, c in enumerate(poly.coeffs)]
        return "\n".join(lines)
    doc = {
        "k": result.params.k,
        "n": result.params.n,
        "method": result.method,
        "coeffs": [rational_str(c) for c in poly.coeffs],
    }
    return json.dumps(doc)


def _render_table(n: int, table: dict, fmt: str) -> str:
    columns = list(range(n))  # l = 0 .. n-1
    if fmt == "csv":
        lines = ["m\\l," + ",".join(str(l) for l in columns)]
        for m in range(1, n + 1):
            row = table[m]
            cells = [str(v) for v in row] + [""] * (n - len(row))
            lines.append(f"{m}," + ",".join(cells))
        return "\n".join(lines)
    if fmt == "json":
        doc = {
            "n": n,
            "rows": [{"m": m, "values": [str(v) for v in table[m]]} for m in range(1, n + 1)],
        }
        return json.dumps(doc)
    width = max(len(str(v)) for row in table.values() for v in row)
    width = max(width, len(str(n - 1)))
    head = "m\\l " + " ".join(f"{l:>{width}}" for l in columns)
    lines = [head]
    for m in range(1, n + 1):
        cells = " ".join(f"{v:>{width}}" for v in table[m])
        lines.append(f"{m:<3} {cells}".rstrip())
    return "\n".join(lines)


def _render_crosscheck(results, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "passed": all(r.passed for r in results),
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "checks": r.checks,
                    "failures": r.failures[:20],
                }
                for r in results
            ],
        }
        return json.dumps(doc)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name}  ({r.checks} checks)")
        for failure in r.failures[:5]:
            lines.append(f"      {failure}")
        if len(r.failures) > 5:
            lines.append(f"      ... and {len(r.failures) - 5} more failures")
    overall = "PASS" if all(r.passed for r in results) else "FAIL"
    lines.append(f"overall: {overall}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlah",
        description="Exact Ehrhart polynomials of hypersimplices and weighted Lah numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial of the (k, n) hypersimplex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=EHRHART_METHODS, default="wlah")
    p.add_argument("--format", choices=_FORMATS, default="text")

    p = sub.add_parser("wlah", help="weighted Lah number W(l, n, m), or the full table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--method", choices=_WLAH_CLI_METHODS, default="closed")
    p.add_argument("--format", choices=_FORMATS, default="text")

    p = sub.add_parser("wlah-table", help="full W(l, n, m) table for a ground set of size n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=_FORMATS, default="csv")

    p = sub.add_parser("crosscheck", help="run the identity cross-check suites")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--oracle-max-n", type=int, default=6)
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ehrhart":
            result = ehrhart_polynomial(args.k, args.n, method=args.method)
            print(_render_polynomial(result, args.format))
            return 0
        if args.command == "wlah":
            if (args.m is None) != (args.l is None):
                parser.error("--m and --l must be given together")
            method = args.method.replace("-", "_")
            if args.m is None:
                print(_render_table(args.n, wlah_table(args.n, method=method), args.format))
                return 0
            value = wlah(args.l, args.n, args.m, method=method)
            if args.format == "json":
                doc = {"n": args.n, "m": args.m, "l": args.l, "method": args.method,
                       "value": str(value)}
                print(json.dumps(doc))
            else:
                print(value)
            return 0
        if args.command == "wlah-table":
            print(_render_table(args.n, wlah_table(args.n), args.format))
            return 0
        if args.command == "crosscheck":
            if args.max_n < 2:
                parser.error("--max-n must be at least 2")
            results = crosscheck.run_all(max_n=args.max_n, oracle_max_n=args.oracle_max_n)
            print(_render_crosscheck(results, args.format))
            return 0 if all(r.passed for r in results) else 1
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
