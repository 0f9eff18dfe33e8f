"""Command-line front-end: analyze family files, run built-in examples.

Exit codes: 0 ok, 1 input error, 2 strict-hypothesis or verification
failure, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import analyze, construct, psi_tables, verify
from .codes import DEFAULT_BUDGET
from .errors import BudgetExceededError, HypothesisViolatedError, ParseError
from .familyfile import parse_families, parse_generator_block
from .fixtures import FIXTURES, get_fixture

__all__ = ["main", "entry"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_HYPOTHESIS = 2
EXIT_BUDGET = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fractalcodes",
        description="Construct and analyze Kronecker-product-sum (fractal) codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze two families from file(s)")
    p.add_argument("paths", nargs="+", metavar="FILE",
                   help="one file with two families ('---' separated) or two files")
    _common_flags(p)
    p.add_argument("--require-acyclic", action="store_true",
                   help="fail (exit 2) when either family is not acyclic")

    p = sub.add_parser("example", help="run a built-in example construction")
    p.add_argument("name", help="example name, or 'all'")
    _common_flags(p)

    p = sub.add_parser("distance", help="exact parameters of one generator block")
    p.add_argument("path", metavar="FILE")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max codewords to enumerate (default 2^24)")

    sub.add_parser("list-examples", help="list built-in example names")
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--exact", action=argparse.BooleanOptionalAction, default=True,
                   help="compute the exact distance by enumeration")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max codewords to enumerate (default 2^24)")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--table", action="store_true",
                   help="print the Psi0/Psi0* table of the lower bound")
    p.add_argument("--out", type=Path, metavar="DIR",
                   help="write report.json, delimited tables, and figures to DIR")


def _render_psi_tables(tables) -> str:
    lines = []
    for label, (value, rows) in zip(("m1", "m2"), tables):
        lines.append(f"{label} table (minimum {value}):")
        lines.append(f"  {'Psi0':<22} {'Psi0*':<22} {label}")
        for row in rows:
            psi0 = "{" + ",".join(a.compact() for a in row.psi0) + "}"
            star = "{" + ",".join(a.compact() for a in row.psi0_star) + "}"
            lines.append(f"  {psi0:<22} {star:<22} {row.value}")
    return "\n".join(lines)


def _emit(report, c_family, d_family, args) -> None:
    tables = None
    if (args.table or args.out) and report.c_acyclic and report.d_acyclic:
        tables = psi_tables(c_family, d_family, budget=args.budget)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
        if args.table:
            if tables is None:
                print("Psi table unavailable: a family is not acyclic")
            else:
                print()
                print(_render_psi_tables(tables))
    if args.out:
        from .plotting import save_report_artifacts

        code = construct(c_family, d_family)
        written = save_report_artifacts(
            report, args.out, code=code, psi_tables=tables, budget=args.budget
        )
        for path in written:
            print(f"wrote {path}", file=sys.stderr)


def _cmd_analyze(args) -> int:
    families = []
    for path in args.paths:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        try:
            families.extend(parse_families(text))
        except ParseError as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    if len(families) != 2:
        print(
            f"error: expected exactly two families, found {len(families)}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    c_family, d_family = families
    if c_family.s != d_family.s:
        print("error: family size mismatch", file=sys.stderr)
        return EXIT_INPUT
    if args.require_acyclic and not (c_family.is_acyclic() and d_family.is_acyclic()):
        print("error: a family is not acyclic (--require-acyclic)", file=sys.stderr)
        return EXIT_HYPOTHESIS
    report = analyze(
        c_family, d_family, compute_exact=args.exact, budget=args.budget
    )
    _emit(report, c_family, d_family, args)
    return EXIT_OK


def _run_fixture(fixture, args) -> int:
    c_family, d_family = fixture.build()
    report = analyze(
        c_family, d_family, compute_exact=args.exact, budget=args.budget
    )
    findings = verify(report, c_family, d_family)
    report_dict = report.to_json_dict()
    for key, want in fixture.expected.items():
        if key == "exact_distance" and not args.exact:
            continue
        got = report_dict.get(key)
        if got != want:
            findings.append(f"expected {key}={want}, got {got}")
    print(f"== {fixture.name}: {fixture.title}")
    _emit(report, c_family, d_family, args)
    if findings:
        for finding in findings:
            print(f"FINDING: {finding}")
        return EXIT_HYPOTHESIS
    print("verify: ok")
    return EXIT_OK


def _cmd_example(args) -> int:
    if args.name == "all":
        worst = EXIT_OK
        for name in FIXTURES:
            out_base = args.out
            if out_base is not None:
                args.out = out_base / name
            code = _run_fixture(FIXTURES[name], args)
            args.out = out_base
            worst = max(worst, code)
            print()
        return worst
    try:
        fixture = get_fixture(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INPUT
    return _run_fixture(fixture, args)


def _cmd_distance(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        code = parse_generator_block(text)
    except ParseError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        d = code.min_distance(args.budget)
    except BudgetExceededError as exc:
        print(
            f"error: budget exceeded; rerun with --budget {exc.required}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    d_text = "inf" if code.k == 0 else str(int(d))
    print(f"n={code.n} k={code.k} d={d_text}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "example":
            return _cmd_example(args)
        if args.command == "distance":
            return _cmd_distance(args)
        if args.command == "list-examples":
            for name, fixture in FIXTURES.items():
                print(f"{name:<12} {fixture.title}")
            return EXIT_OK
    except BudgetExceededError as exc:
        print(
            f"error: budget exceeded; rerun with --budget {exc.required}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    except HypothesisViolatedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
