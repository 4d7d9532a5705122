"""Command-line front end.

Subcommands: pepin, paper-test, cross-check, verify-identities, factor,
bench.  Machine-readable output (``--format json`` or ``csv``) goes to
stdout and never mixes with diagnostics, which go to stderr.  Exit codes:
0 success, 1 usage or domain error, 2 budget exceeded, 3 the two procedures
disagreed somewhere (the headline finding a cross-check run watches for).
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import __version__
from .arith import FermatModulus, OpCounter, fermat_value
from .budget import BudgetExceededError, max_bits
from .primality import (
    NotApplicableError,
    TestReport,
    Verdict,
    cross_check,
    paper_scan,
    pepin_test,
    trial_factor_search,
    verify_two_order,
)
from .report import ReportRecord, records_table, render_csv, render_json_lines, render_table
from .sequences import a_exact, overlap_check
from .zsqrt2 import ONE, U, V, ZSqrt2, frobenius_check, trace_pow2

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INCONSISTENT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _emit(records: list[ReportRecord], fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(render_json_lines(records))
    elif fmt == "csv":
        sys.stdout.write(render_csv(records))
    else:
        sys.stdout.write(records_table(records))


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )


def _cross_check_record(report: TestReport, command: str) -> ReportRecord:
    return ReportRecord(
        command=command,
        n=report.n,
        bits=FermatModulus(report.n).b,
        verdict_pepin=report.pepin.label,
        verdict_paper=report.paper.label,
        found_q=report.scan.found_q,
        window_lo=report.scan.window[0],
        window_hi=report.scan.window[1],
        squarings_pepin=report.squarings_pepin,
        squarings_scan=report.squarings_scan,
        consistent=report.consistent,
        elapsed_ms=report.elapsed_ms_pepin + report.elapsed_ms_scan,
        trace_hash=report.scan.residue_trace_hash,
    )


def _cmd_pepin(args: argparse.Namespace) -> int:
    counter = OpCounter()
    start = time.perf_counter()
    verdict = pepin_test(args.n, counter)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    record = ReportRecord(
        command="pepin",
        n=args.n,
        bits=FermatModulus(args.n).b,
        verdict_pepin=verdict.label,
        squarings_pepin=counter.squarings,
        elapsed_ms=elapsed_ms,
    )
    _emit([record], args.format)
    return EXIT_OK


def _cmd_paper_test(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    scan = paper_scan(args.n, full_window=args.full_range)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if scan.found_q is not None:
        verdict = Verdict.divisor_witness(scan.found_q)
    else:
        verdict = Verdict.composite_certified()
    record = ReportRecord(
        command="paper-test",
        n=args.n,
        bits=FermatModulus(args.n).b,
        verdict_paper=verdict.label,
        found_q=scan.found_q,
        window_lo=scan.window[0],
        window_hi=scan.window[1],
        squarings_scan=scan.squarings,
        elapsed_ms=elapsed_ms,
        trace_hash=scan.residue_trace_hash,
    )
    _emit([record], args.format)
    if scan.anomalies:
        print(f"anomalous zero residues below the window: {list(scan.anomalies)}", file=sys.stderr)
    return EXIT_OK


def _checked_range(args: argparse.Namespace) -> range:
    if args.from_n < 2 or args.from_n > args.to_n:
        raise _UsageError(f"need 2 <= from <= to, got from={args.from_n} to={args.to_n}")
    FermatModulus(args.to_n)  # fail the whole range early if it cannot fit
    return range(args.from_n, args.to_n + 1)


def _run_reports(ns: range, jobs: int) -> list[TestReport]:
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(cross_check, ns))
    return [cross_check(n) for n in ns]


def _cmd_cross_check(args: argparse.Namespace) -> int:
    ns = _checked_range(args)
    reports = _run_reports(ns, args.jobs)
    records = [_cross_check_record(report, "cross-check") for report in reports]
    _emit(records, args.format)
    agreed = sum(1 for report in reports if report.consistent)
    summary = f"cross-check: {agreed}/{len(reports)} consistent for n={ns.start}..{ns.stop - 1}"
    print(summary, file=sys.stdout if args.format == "table" else sys.stderr)
    return EXIT_OK if agreed == len(reports) else EXIT_INCONSISTENT


def _cmd_verify_identities(args: argparse.Namespace) -> int:
    n_max = args.max_n
    if n_max < 0:
        raise _UsageError(f"need a nonnegative --max-n, got {n_max}")
    FermatModulus(n_max)  # over-budget requests fail before any work
    exponent_cap = max_bits().bit_length() - 1
    unexpected = 0

    def check(ok: bool, label: str) -> None:
        nonlocal unexpected
        if not ok:
            unexpected += 1
        print(f"{'ok        ' if ok else 'UNEXPECTED'}  {label}")

    check(U + V == ZSqrt2(6, 0) and U * V == ONE, "unit pair: u+v = 6 and u*v = 1")

    k_hi = min(n_max, exponent_cap - 1)
    check(
        all(trace_pow2(k) == a_exact(k + 1) for k in range(k_hi + 1)),
        f"trace bridge: u^(2^k) + v^(2^k) equals term k+1, k = 0..{k_hi}",
    )

    for n in range(min(n_max, 4) + 1):
        expected = n >= 2
        actual = frobenius_check(fermat_value(n))
        note = "" if expected else " (documented boundary: fails below n=2)"
        check(actual == expected, f"frobenius at F_{n}: expected {expected}{note}")

    overlap_hi = min(n_max, exponent_cap - 1)
    if overlap_hi >= 1:
        report = overlap_check(overlap_hi)
        check(report.ok, f"interleaving F_n < A_n < F_(n+1) for n = 1..{overlap_hi}")

    check(
        all(verify_two_order(n) for n in range(n_max + 1)),
        f"order identity 2^(2^(n+1)) = 1 mod F_n for n = 0..{n_max}",
    )

    gcd_hi = min(n_max, 12)
    if gcd_hi >= 2:
        terms = [a_exact(q) for q in range(1, gcd_hi + 1)]
        pairs_ok = all(
            math.gcd(terms[i], terms[j]) == 2
            for i in range(len(terms))
            for j in range(i + 1, len(terms))
        )
        check(pairs_ok, f"pairwise gcd of terms 1..{gcd_hi} is 2")

    if unexpected:
        print(f"{unexpected} unexpected outcome(s)", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _cmd_factor(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    witness = trial_factor_search(args.n, args.k_limit)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    record = ReportRecord(
        command="factor",
        n=args.n,
        bits=FermatModulus(args.n).b,
        factor=witness.factor if witness else None,
        cofactor=witness.cofactor if witness else None,
        elapsed_ms=elapsed_ms,
    )
    if args.format == "table":
        if witness is None:
            print(f"F_{args.n}: none up to k = {args.k_limit}")
        else:
            print(f"F_{args.n} = {witness.factor} x {witness.cofactor}   (k = {witness.k})")
    else:
        _emit([record], args.format)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    ns = _checked_range(args)
    reports = [cross_check(n) for n in ns]
    if args.format == "table":
        headers = ["n", "bits", "squarings_pepin", "pepin_ms", "squarings_scan", "scan_ms", "consistent"]
        rows = [
            [
                report.n,
                FermatModulus(report.n).b,
                report.squarings_pepin,
                report.elapsed_ms_pepin,
                report.squarings_scan,
                report.elapsed_ms_scan,
                report.consistent,
            ]
            for report in reports
        ]
        sys.stdout.write(render_table(headers, rows))
    else:
        _emit([_cross_check_record(report, "bench") for report in reports], args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fermatlab",
        description="Primality experiments on the numbers 2^(2^n) + 1: a squaring-recurrence "
        "divisibility scan cross-checked against the classical base-3 criterion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("pepin", help="run the base-3 criterion on F_n")
    p.add_argument("n", type=int)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_pepin)

    p = sub.add_parser("paper-test", help="scan the recurrence for a term divisible by F_n")
    p.add_argument("n", type=int)
    p.add_argument(
        "--full-range",
        action="store_true",
        help="widen the scan window from [n, 2^n) to [1, 2^n]",
    )
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_paper_test)

    p = sub.add_parser("cross-check", help="run both tests per n and compare verdicts")
    p.add_argument("--from", dest="from_n", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="to_n", type=int, required=True, metavar="B")
    p.add_argument("--jobs", type=int, default=1, help="worker threads (output order is fixed)")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_cross_check)

    p = sub.add_parser("verify-identities", help="check the exact identities behind the scan")
    p.add_argument("--max-n", dest="max_n", type=int, default=10)
    p.set_defaults(handler=_cmd_verify_identities)

    p = sub.add_parser("factor", help="search small divisors k*2^(n+2) + 1 of F_n")
    p.add_argument("n", type=int)
    p.add_argument("--k-limit", dest="k_limit", type=int, default=1000)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("bench", help="squaring counts and wall times, both tests per n")
    p.add_argument("--from", dest="from_n", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="to_n", type=int, required=True, metavar="B")
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except NotApplicableError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
