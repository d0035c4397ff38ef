"""Command-line front end: count tables, identity suites, oracle runs,
composition listings, and DOT export of canonical diagrams.

Data goes to stdout, errors and notes to stderr.  Machine-readable
formats always carry counts as exact decimal strings, never as native
numbers.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import counting, oracle
from .compositions import count_compositions, enumerate_compositions
from .counting import (
    DEFAULT_TERM_BUDGET,
    ExactnessError,
    MethodDisagreementError,
    TermBudgetError,
    VerificationReport,
)
from .oracle import OrderCapError


def _print_aligned(rows: list[list[str]]) -> None:
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.rjust(width) for width, cell in zip(widths, row)))


def cmd_counts(args: argparse.Namespace) -> int:
    rows = counting.count_table(
        args.max_order, method=args.method, term_budget=args.term_budget
    )
    header = ["m", "total", "bubble", "connected", "distinct"]
    cells = [
        [str(r.m), str(r.total), str(r.bubble), str(r.connected), str(r.distinct)]
        for r in rows
    ]
    if args.format == "table":
        _print_aligned([header] + cells)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
    elif args.format == "json":
        payload = {
            "max_order": args.max_order,
            "method": args.method,
            "rows": [
                {
                    "m": r.m,
                    "total": str(r.total),
                    "bubble": str(r.bubble),
                    "connected": str(r.connected),
                    "distinct": str(r.distinct),
                }
                for r in rows
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "bfile":
        # OEIS-style b-file of the distinct-diagram sequence, indexed from 1
        for r in rows:
            if r.m >= 1:
                print(f"{r.m} {r.distinct}")
    return 0


def _verify_report(max_order: int, term_budget: int) -> VerificationReport:
    report = VerificationReport()
    report.extend(counting.verify_convolution(max_order))
    report.extend(counting.verify_divisibility(max_order))
    report.extend(counting.verify_rewrite_identities(max_order))

    # The cross-method and coefficient suites expand up to 2**m composition
    # terms per order, so they stop where the term budget does.
    exponential_cap = min(max_order, max(term_budget.bit_length() - 1, 1))
    if exponential_cap < max_order:
        print(
            f"note: exponential-cost suites capped at order {exponential_cap} "
            f"by the term budget of {term_budget}",
            file=sys.stderr,
        )
    report.extend(counting.verify_three_path(exponential_cap, term_budget=term_budget))
    report.extend(counting.verify_coefficient_recursion(exponential_cap))

    for n in range(1, min(max_order, 16) + 1):
        streamed = sum(1 for _ in enumerate_compositions(n))
        report.add("composition-count", f"n={n}", 1 << (n - 1), streamed)
        report.add("composition-count-formula", f"n={n}", 1 << (n - 1), count_compositions(n))

    for m in range(1, min(max_order, oracle.DEFAULT_ORDER_CAP) + 1):
        census = oracle.enumerate_matchings(m)
        report.add("wick-total", f"m={m}", counting.total_diagrams(m), census.total)
        report.add(
            "wick-connected", f"m={m}", counting.connected_recurrence(m), census.connected
        )
        report.add(
            "wick-vacuum",
            f"m={m}",
            counting.bubble_diagrams(m),
            oracle.enumerate_vacuum_matchings(m),
        )
        orbits = oracle.orbit_census(m, include_representatives=False)
        report.add("orbit-count", f"m={m}", counting.arques_walsh(m), orbits.orbit_count)
        report.add(
            "orbit-histogram",
            f"m={m}",
            {counting.double_factorial(2 * m): counting.arques_walsh(m)},
            orbits.orbit_sizes,
        )
    return report


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_order < 1:
        raise ValueError(f"--max-order must be >= 1, got {args.max_order}")
    report = _verify_report(args.max_order, args.term_budget)
    passed = sum(1 for c in report.checks if c.passed)
    if args.format == "json":
        payload = {
            "overall": report.overall,
            "passed": passed,
            "total": len(report.checks),
            "checks": [
                {
                    "name": c.name,
                    "params": c.params,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                }
                for c in report.checks
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        rows = [["check", "params", "expected", "actual", "status"]]
        rows += [
            [c.name, c.params, c.expected, c.actual, "PASS" if c.passed else "FAIL"]
            for c in report.checks
        ]
        _print_aligned(rows)
        print(f"overall: {'PASS' if report.overall else 'FAIL'} ({passed}/{len(report.checks)} checks)")
    return 0 if report.overall else 1


def _write_dot_files(census: oracle.OrbitCensus, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for index, diagram in enumerate(census.representatives, start=1):
        path = out_dir / f"diagram_m{census.order}_{index}.dot"
        path.write_text(oracle.export_diagram(diagram))
        paths.append(path)
    return paths


def cmd_oracle(args: argparse.Namespace) -> int:
    m = args.order
    census = oracle.enumerate_matchings(m, override=args.override)
    vacuum = oracle.enumerate_vacuum_matchings(m, override=args.override)
    orbits = None
    if m <= oracle.DEFAULT_ORDER_CAP:
        orbits = oracle.orbit_census(m)
    else:
        print(
            f"note: orbit census skipped above order {oracle.DEFAULT_ORDER_CAP}",
            file=sys.stderr,
        )

    pairs: list[tuple[str, str]] = [
        ("order", str(m)),
        ("total", str(census.total)),
        ("connected", str(census.connected)),
        ("vacuum", str(vacuum)),
    ]
    if orbits is not None:
        pairs.append(("orbits", str(orbits.orbit_count)))
        pairs += [
            (f"orbit_size_{size}", str(count))
            for size, count in orbits.orbit_sizes.items()
        ]

    if args.format == "table":
        _print_aligned([[k, v] for k, v in pairs])
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["metric", "value"])
        writer.writerows(pairs)
    elif args.format == "json":
        payload: dict = {
            "order": m,
            "total": str(census.total),
            "connected": str(census.connected),
            "vacuum": str(vacuum),
        }
        if orbits is not None:
            payload["orbits"] = str(orbits.orbit_count)
            payload["orbit_sizes"] = {
                str(size): str(count) for size, count in orbits.orbit_sizes.items()
            }
        print(json.dumps(payload, indent=2))

    if args.dot_dir is not None:
        if orbits is None:
            raise OrderCapError(
                f"DOT export needs the orbit census, capped at order {oracle.DEFAULT_ORDER_CAP}"
            )
        written = _write_dot_files(orbits, Path(args.dot_dir))
        print(f"note: wrote {len(written)} DOT files to {args.dot_dir}", file=sys.stderr)
    return 0


def cmd_compositions(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be >= 1, got {args.n}")
    if args.list:
        for parts in enumerate_compositions(args.n):
            print("+".join(str(part) for part in parts))
    else:
        print(count_compositions(args.n))
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    census = oracle.orbit_census(args.order)
    written = _write_dot_files(census, Path(args.out_dir))
    print(f"wrote {len(written)} DOT files to {args.out_dir}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="feyncount",
        description="Exact connected-Feynman-diagram counts with brute-force cross-checks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("counts", help="print the per-order count table")
    p.add_argument("--max-order", type=int, required=True, metavar="M")
    p.add_argument(
        "--method",
        choices=["recurrence", "closed-form", "arques-walsh", "all"],
        default="recurrence",
    )
    p.add_argument(
        "--format", choices=["table", "csv", "json", "bfile"], default="table"
    )
    p.add_argument("--term-budget", type=int, default=DEFAULT_TERM_BUDGET, metavar="N")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("verify", help="run the identity and oracle suites")
    p.add_argument("--max-order", type=int, required=True, metavar="M")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--term-budget", type=int, default=DEFAULT_TERM_BUDGET, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force enumeration census at one order")
    p.add_argument("--order", type=int, required=True, metavar="M")
    p.add_argument("--override", action="store_true",
                   help=f"allow order {oracle.OVERRIDE_ORDER_CAP} enumeration")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--dot-dir", metavar="DIR",
                   help="also write each canonical diagram as a DOT file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compositions", help="count or list compositions of n")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--list", action="store_true", help="print every composition")
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser("export", help="write canonical diagrams as DOT files")
    p.add_argument("--order", type=int, required=True, metavar="M")
    p.add_argument("--out-dir", required=True, metavar="DIR")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OrderCapError, TermBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MethodDisagreementError, ExactnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
