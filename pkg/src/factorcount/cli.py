"""Command-line interface: count, table, verify, and bench subcommands.

Exit status contract: 0 success / all verified, 1 usage or budget error,
2 verification mismatch, 3 internal divisibility-assertion failure.
All numeric output is plain decimal; identical flags produce byte-identical
output (bench timing numbers excepted, and marked as such).
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Iterable

from . import closed_forms, oracle, recurrences, tables
from .arithmetic import BudgetError, factorize
from .closed_forms import ExactDivisionError
from .tables import TableRow, TableSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the exit contract wants 1
    def error(self, message: str):  # type: ignore[override]
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="factorcount",
        description="Count factorizations of an integer into k factors, exactly.",
        epilog=(
            "Budgets are configurable via FACTORCOUNT_ORACLE_MAX_M, "
            "FACTORCOUNT_ORACLE_MAX_K and FACTORCOUNT_SIEVE_MAX."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    count = sub.add_parser("count", help="count factorizations of a single m")
    count.add_argument("--m", type=int, required=True, help="the integer to factor")
    count.add_argument("--k", type=int, required=True, help="number of factors")
    count.add_argument("--ell", type=int, default=1, help="lower bound on factors (default 1)")
    count.add_argument(
        "--method",
        choices=("closed", "recursive", "oracle"),
        default="closed",
        help="closed needs k <= 4 (unordered) and ell in {1,2}",
    )
    count.add_argument(
        "--ordered", action="store_true", help="count ordered tuples instead of nondecreasing"
    )
    count.add_argument(
        "--verbose",
        action="store_true",
        help="with --method oracle, also print the nondecreasing tuples",
    )
    count.set_defaults(handler=_cmd_count)

    table = sub.add_parser("table", help="tabulate a count for m = 1..N or 2..N")
    table.add_argument("--max", type=int, required=True, help="largest m (>= 2)")
    table.add_argument("--k", type=int, help="number of factors (omit with --total)")
    table.add_argument(
        "--total", action="store_true", help="sum over all factor counts (needs ell >= 2)"
    )
    table.add_argument(
        "--ell", type=int, default=None, help="lower bound (default 1 per-k, 2 for totals)"
    )
    table.add_argument(
        "--nu", action="store_true", help="tabulate ordered counts instead of nondecreasing"
    )
    table.add_argument(
        "--method",
        choices=("closed", "recursive", "oracle"),
        default=None,
        help="default: closed when available, else recursive",
    )
    table.add_argument("--format", choices=("csv", "bfile"), default="csv")
    table.add_argument("--out", help="output file (default stdout)")
    table.add_argument(
        "--compare", metavar="BFILE", help="compare against a reference b-file instead of writing"
    )
    table.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    table.set_defaults(handler=_cmd_table)

    verify = sub.add_parser("verify", help="cross-check closed, recursive and oracle counts")
    verify.add_argument("--max", type=int, required=True, help="largest m (>= 2)")
    verify.add_argument("--k-max", type=int, default=4, dest="k_max")
    verify.add_argument("--ell-max", type=int, default=2, dest="ell_max")
    verify.set_defaults(handler=_cmd_verify)

    bench = sub.add_parser("bench", help="time table generation per method")
    bench.add_argument("--max", type=int, required=True, help="largest m (>= 2)")
    bench.add_argument("--k", type=int, default=4)
    bench.add_argument("--ell", type=int, default=1)
    bench.add_argument("--nu", action="store_true", help="bench ordered counts")
    bench.add_argument(
        "--methods",
        default="closed,recursive",
        help="comma-separated subset of closed,recursive,oracle",
    )
    bench.set_defaults(handler=_cmd_bench)

    return parser


def _cmd_count(args: argparse.Namespace) -> int:
    m, k, ell = args.m, args.k, args.ell
    if k < 1 or ell < 1:
        raise _UsageError("--k and --ell must be >= 1")
    if args.method == "closed":
        if ell not in (1, 2):
            raise _UsageError("--method closed needs --ell 1 or 2")
        if not args.ordered and k > 4:
            raise _UsageError("--method closed stops at --k 4; use --method recursive")
        signature = factorize(m)
        if args.ordered:
            value = closed_forms.ordered_count(signature, k, ell)
        else:
            value = closed_forms.nondecreasing_count(signature, k, ell)
    elif args.method == "recursive":
        if args.ordered:
            value = recurrences.ordered_count(m, k, ell)
        else:
            value = recurrences.nondecreasing_count(m, k, ell)
    else:
        tuples = oracle.enumerate_nondecreasing(m, k, ell)
        if args.verbose:
            for factors in tuples:
                print(" ".join(str(f) for f in factors))
        if args.ordered:
            value = oracle.count_ordered(m, k, ell)
        else:
            value = len(tuples)
    print(value)
    return EXIT_OK


def _table_spec(args: argparse.Namespace) -> TableSpec:
    if args.total == (args.k is not None):
        raise _UsageError("give exactly one of --k or --total")
    if args.max < 2:
        raise _UsageError("--max must be >= 2")
    if args.threads < 1:
        raise _UsageError("--threads must be >= 1")
    ell = args.ell
    if ell is None:
        ell = 2 if args.total else 1
    if args.total:
        kind = "ordered-total" if args.nu else "nondecreasing-total"
        method = args.method or "recursive"
        spec = TableSpec(kind=kind, min_factor=ell, method=method)
    else:
        kind = "ordered" if args.nu else "nondecreasing"
        method = args.method
        if method is None:
            closed_ok = ell in (1, 2) and (args.nu or args.k <= 4)
            method = "closed" if closed_ok else "recursive"
        spec = TableSpec(kind=kind, k=args.k, min_factor=ell, method=method)
    if spec.method == "oracle" and args.max > oracle.max_m():
        raise _UsageError(
            f"oracle method refused: --max {args.max} exceeds the oracle budget "
            f"{oracle.max_m()} (FACTORCOUNT_ORACLE_MAX_M)"
        )
    try:
        spec.validate()
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return spec


def _cmd_table(args: argparse.Namespace) -> int:
    spec = _table_spec(args)
    if args.compare and args.out:
        raise _UsageError("--compare and --out are mutually exclusive")
    if args.threads > 1:
        rows: Iterable[TableRow] = tables.generate_table_parallel(args.max, spec, args.threads)
    else:
        rows = tables.generate_table(args.max, spec)
    if args.compare:
        report = tables.compare_reference(rows, args.compare)
        print(report.summary())
        return EXIT_OK if report.ok else EXIT_MISMATCH
    writer = tables.write_csv if args.format == "csv" else tables.write_bfile
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as handle:
            writer(rows, handle)
    else:
        writer(rows, sys.stdout)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max < 2:
        raise _UsageError("--max must be >= 2")
    if args.k_max < 1 or args.ell_max < 1:
        raise _UsageError("--k-max and --ell-max must be >= 1")
    for k in range(1, args.k_max + 1):
        for ell in range(1, args.ell_max + 1):
            for m in range(2, args.max + 1):
                expected = oracle.count_nondecreasing(m, k, ell)
                mismatch = _first_mismatch_nondecreasing(m, k, ell, expected)
                if mismatch:
                    print(mismatch)
                    return EXIT_MISMATCH
                expected = oracle.count_ordered(m, k, ell)
                mismatch = _first_mismatch_ordered(m, k, ell, expected)
                if mismatch:
                    print(mismatch)
                    return EXIT_MISMATCH
            print(f"k={k} ell={ell} m=2..{args.max}: ok")
    print(f"all counts agree for m=2..{args.max}, k<={args.k_max}, ell<={args.ell_max}")
    return EXIT_OK


def _first_mismatch_nondecreasing(m: int, k: int, ell: int, expected: int) -> str | None:
    got = recurrences.nondecreasing_count(m, k, ell)
    if got != expected:
        return f"MISMATCH m={m} k={k} ell={ell} recursive={got} oracle={expected}"
    if k <= 4 and ell <= 2:
        got = closed_forms.nondecreasing_count(factorize(m), k, ell)
        if got != expected:
            return f"MISMATCH m={m} k={k} ell={ell} closed={got} oracle={expected}"
    if ell >= 2:
        got = recurrences.nondecreasing_count_by_shift(m, k, ell)
        if got != expected:
            return f"MISMATCH m={m} k={k} ell={ell} shift={got} oracle={expected}"
    return None


def _first_mismatch_ordered(m: int, k: int, ell: int, expected: int) -> str | None:
    got = recurrences.ordered_count(m, k, ell)
    if got != expected:
        return f"MISMATCH m={m} k={k} ell={ell} ordered recursive={got} oracle={expected}"
    if ell <= 2:
        got = closed_forms.ordered_count(factorize(m), k, ell)
        if got != expected:
            return f"MISMATCH m={m} k={k} ell={ell} ordered closed={got} oracle={expected}"
    return None


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.max < 2:
        raise _UsageError("--max must be >= 2")
    methods = [name.strip() for name in args.methods.split(",") if name.strip()]
    if not methods:
        raise _UsageError("--methods must name at least one method")
    kind = "ordered" if args.nu else "nondecreasing"
    specs = []
    for method in methods:
        if method not in tables.METHODS:
            raise _UsageError(f"unknown method {method!r}")
        if method == "oracle" and args.max > oracle.max_m():
            raise _UsageError(
                f"oracle method refused: --max {args.max} exceeds the oracle budget "
                f"{oracle.max_m()} (FACTORCOUNT_ORACLE_MAX_M)"
            )
        spec = TableSpec(kind=kind, k=args.k, min_factor=args.ell, method=method)
        try:
            spec.validate()
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        specs.append(spec)
    print(f"bench: {kind} k={args.k} ell={args.ell} m=2..{args.max}")
    print("timings vary run to run; every other output of this tool is deterministic")
    for spec in specs:
        recurrences.clear_caches()  # cold-start timings
        started = time.perf_counter()
        rows = 0
        for _ in tables.generate_table(args.max, spec):
            rows += 1
        elapsed = time.perf_counter() - started
        rate = rows / elapsed if elapsed > 0 else float("inf")
        print(f"{spec.method}: {elapsed:.3f} s ({rate:.0f} rows/s)")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactDivisionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
