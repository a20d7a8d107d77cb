"""Smallest-prime-factor sieve and batch tables of factorization counts.

Output formats are deterministic byte-for-byte: CSV with an "m,value" header
and OEIS-style b-files ("index value" lines), both LF-terminated, so tables
can be diffed against reference sequence data. Table generation streams rows
and is constant-memory apart from the sieve itself.
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import IO, Iterable, Iterator, NamedTuple, Sequence

from . import closed_forms, oracle, recurrences
from .arithmetic import BudgetError, PrimeSignature

DEFAULT_SIEVE_MAX = 10_000_000
_PARALLEL_CHUNK = 50_000

KINDS = ("nondecreasing", "ordered", "nondecreasing-total", "ordered-total")
METHODS = ("closed", "recursive", "oracle")


def sieve_budget() -> int:
    """Largest sieve limit allowed (FACTORCOUNT_SIEVE_MAX)."""
    return int(os.environ.get("FACTORCOUNT_SIEVE_MAX", DEFAULT_SIEVE_MAX))


class SpfTable:
    """Smallest prime factor of every integer in [2, limit].

    spf[m] divides m and is its least prime divisor; entries 0 and 1 are
    padding so the list can be indexed directly by m.
    """

    __slots__ = ("limit", "spf")

    def __init__(self, limit: int, spf: list[int]):
        self.limit = limit
        self.spf = spf

    def smallest_factor(self, m: int) -> int:
        if not 2 <= m <= self.limit:
            raise ValueError(f"m={m} outside the sieve range [2, {self.limit}]")
        return self.spf[m]


def build_spf(limit: int) -> SpfTable:
    """Eratosthenes-style smallest-prime-factor sieve up to limit."""
    if limit < 2:
        raise ValueError(f"limit={limit} must be >= 2")
    if limit > sieve_budget():
        raise BudgetError(
            f"sieve limit {limit} exceeds {sieve_budget()}; "
            "raise FACTORCOUNT_SIEVE_MAX to override"
        )
    spf = list(range(limit + 1))
    if limit >= 4:
        spf[4::2] = [2] * ((limit - 4) // 2 + 1)
    for p in range(3, isqrt(limit) + 1, 2):
        if spf[p] == p:
            for multiple in range(p * p, limit + 1, 2 * p):
                if spf[multiple] == multiple:
                    spf[multiple] = p
    return SpfTable(limit, spf)


def factorize_fast(m: int, table: SpfTable) -> PrimeSignature:
    """Same output as arithmetic.factorize, via repeated smallest-factor division."""
    if m < 2:
        raise ValueError(f"m={m} must be >= 2")
    if m > table.limit:
        raise ValueError(f"m={m} exceeds the sieve limit {table.limit}")
    spf = table.spf
    value = m
    factors: list[tuple[int, int]] = []
    while m > 1:
        p = spf[m]
        count = 0
        while spf[m] == p:  # spf[1] == 1 terminates the run
            m //= p
            count += 1
        factors.append((p, count))
    return PrimeSignature(tuple(factors), value)


class TableRow(NamedTuple):
    m: int
    value: int


@dataclass(frozen=True)
class TableSpec:
    """Which count to tabulate.

    Per-k kinds ("nondecreasing", "ordered") need k and cover m = 2..N; the
    "-total" kinds sum over all lengths, need min_factor >= 2, and include the
    m = 1 row with value 1 (the empty product), matching the convention of
    published sequence data.
    """

    kind: str = "nondecreasing"
    k: int | None = None
    min_factor: int = 1
    method: str = "recursive"

    @property
    def per_k(self) -> bool:
        return not self.kind.endswith("total")

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, not {self.kind!r}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, not {self.method!r}")
        if self.per_k:
            if self.k is None or self.k < 1:
                raise ValueError(f"kind {self.kind!r} needs k >= 1")
            if self.min_factor < 1:
                raise ValueError("min_factor must be >= 1")
            if self.method == "closed":
                if self.min_factor not in (1, 2):
                    raise ValueError("closed tables cover min_factor 1 and 2 only")
                if self.kind == "nondecreasing" and self.k > 4:
                    raise ValueError("closed nondecreasing tables stop at k = 4")
        else:
            if self.k is not None:
                raise ValueError(f"kind {self.kind!r} does not take k")
            if self.min_factor < 2:
                raise ValueError("total tables need min_factor >= 2")
            if self.method == "closed":
                raise ValueError("total tables have no closed form; use recursive")


def _batch_exponents(spf: Sequence[int], m: int, out: list[int]) -> list[int]:
    out.clear()
    while m > 1:
        p = spf[m]
        count = 0
        while spf[m] == p:
            m //= p
            count += 1
        out.append(count)
    return out


def _range_rows(
    spec: TableSpec, start: int, stop: int, table: SpfTable | None
) -> Iterator[TableRow]:
    """Rows for m in [start, stop); start >= 2."""
    if spec.per_k and spec.method == "closed":
        assert table is not None
        spf = table.spf
        ordered = spec.kind == "ordered"
        k = spec.k
        lo = spec.min_factor
        exps: list[int] = []
        for m in range(start, stop):
            _batch_exponents(spf, m, exps)
            if ordered:
                value = closed_forms.ordered_from_exponents(exps, k, lo)
            else:
                value = closed_forms.nondecreasing_from_exponents(exps, k, lo)
            yield TableRow(m, value)
        return
    for m in range(start, stop):
        yield TableRow(m, _single_value(spec, m))


def _single_value(spec: TableSpec, m: int) -> int:
    ordered = spec.kind.startswith("ordered")
    if spec.per_k:
        if spec.method == "recursive":
            fn = recurrences.ordered_count if ordered else recurrences.nondecreasing_count
            return fn(m, spec.k, spec.min_factor)
        if ordered:
            return oracle.count_ordered(m, spec.k, spec.min_factor)
        return oracle.count_nondecreasing(m, spec.k, spec.min_factor)
    if spec.method == "oracle":
        return oracle.count_all_lengths(m, spec.min_factor, ordered=ordered)
    fn = recurrences.ordered_total if ordered else recurrences.nondecreasing_total
    return fn(m, spec.min_factor)


def generate_table(
    limit: int, spec: TableSpec, table: SpfTable | None = None
) -> Iterator[TableRow]:
    """Stream TableRow(m, value) for m up to limit, in increasing m.

    Totals tables start at m = 1 (value 1); per-k tables start at m = 2.
    An existing SpfTable covering limit can be passed to avoid re-sieving.
    """
    spec.validate()
    if limit < 2:
        raise ValueError(f"limit={limit} must be >= 2")
    if spec.per_k and spec.method == "closed" and (table is None or table.limit < limit):
        table = build_spf(limit)
    return _stream(limit, spec, table)


def _stream(limit: int, spec: TableSpec, table: SpfTable | None) -> Iterator[TableRow]:
    if not spec.per_k:
        yield TableRow(1, 1)
    yield from _range_rows(spec, 2, limit + 1, table)


_worker_table: SpfTable | None = None


def _chunk_values(args: tuple[TableSpec, int, int, int]) -> list[TableRow]:
    spec, limit, start, stop = args
    global _worker_table
    table = None
    if spec.per_k and spec.method == "closed":
        if _worker_table is None or _worker_table.limit < limit:
            _worker_table = build_spf(limit)
        table = _worker_table
    return list(_range_rows(spec, start, stop, table))


def generate_table_parallel(
    limit: int, spec: TableSpec, processes: int, chunk: int = _PARALLEL_CHUNK
) -> Iterator[TableRow]:
    """Same rows as generate_table, computed over index chunks in a process pool.

    Chunks are merged back in index order, so the stream is byte-identical to
    the single-process one.
    """
    spec.validate()
    if limit < 2:
        raise ValueError(f"limit={limit} must be >= 2")
    if processes < 1:
        raise ValueError(f"processes={processes} must be >= 1")
    if processes == 1:
        return generate_table(limit, spec)
    if limit > sieve_budget() and spec.per_k and spec.method == "closed":
        raise BudgetError(
            f"sieve limit {limit} exceeds {sieve_budget()}; "
            "raise FACTORCOUNT_SIEVE_MAX to override"
        )
    jobs = [
        (spec, limit, start, min(start + chunk, limit + 1))
        for start in range(2, limit + 1, chunk)
    ]
    return _merge_parallel(limit, spec, processes, jobs)


def _merge_parallel(
    limit: int, spec: TableSpec, processes: int, jobs: list[tuple[TableSpec, int, int, int]]
) -> Iterator[TableRow]:
    if not spec.per_k:
        yield TableRow(1, 1)
    with multiprocessing.Pool(processes) as pool:
        for rows in pool.imap(_chunk_values, jobs):
            yield from rows


def write_csv(rows: Iterable[TableRow], out: IO[str]) -> None:
    """CSV with header "m,value", one row per index, LF line endings."""
    out.write("m,value\n")
    for m, value in rows:
        out.write(f"{m},{value}\n")


def write_bfile(rows: Iterable[TableRow], out: IO[str]) -> None:
    """OEIS b-file style: "index value" per line, LF line endings."""
    for m, value in rows:
        out.write(f"{m} {value}\n")


class BFileError(ValueError):
    """A reference file failed to parse; `line` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def read_bfile(source: str | Path | IO[str]) -> list[tuple[int, int]]:
    """Parse "index value" lines into (index, value) pairs.

    Blank lines and lines starting with '#' are skipped; indices must be
    strictly increasing.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    entries: list[tuple[int, int]] = []
    last: int | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(number, f"expected 'index value', got {line!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(number, f"non-integer field in {line!r}") from None
        if last is not None and index <= last:
            raise BFileError(number, f"index {index} does not increase past {last}")
        last = index
        entries.append((index, value))
    return entries


@dataclass
class ComparisonReport:
    """Outcome of comparing computed rows against reference sequence data."""

    first_index: int | None
    last_index: int | None
    compared: int
    mismatches: list[tuple[int, int, int]]  # (index, computed, reference)
    computed_only: int
    reference_only: int

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if self.compared == 0:
            lines = ["compared nothing: no overlapping indices"]
        else:
            verdict = "OK" if self.ok else f"{len(self.mismatches)} mismatch(es)"
            lines = [
                f"compared indices {self.first_index}..{self.last_index} "
                f"({self.compared} values): {verdict}"
            ]
        for index, got, want in self.mismatches:
            lines.append(f"  m={index}: computed {got}, reference {want}")
        if self.computed_only or self.reference_only:
            lines.append(
                f"outside the overlap: {self.computed_only} computed row(s), "
                f"{self.reference_only} reference entry(ies)"
            )
        return "\n".join(lines)


def compare_reference(
    rows: Iterable[TableRow],
    reference: str | Path | IO[str] | Sequence[tuple[int, int]],
) -> ComparisonReport:
    """Compare a row stream against reference (index, value) data.

    Only overlapping indices are compared. Rows or reference entries without a
    counterpart are tallied, not flagged: published references are routinely
    truncated relative to what we can compute, and vice versa.
    """
    if isinstance(reference, (str, Path)) or hasattr(reference, "read"):
        entries = read_bfile(reference)  # type: ignore[arg-type]
    else:
        entries = list(reference)  # type: ignore[arg-type]
    wanted = dict(entries)
    first: int | None = None
    last: int | None = None
    compared = 0
    computed_only = 0
    mismatches: list[tuple[int, int, int]] = []
    for m, value in rows:
        expected = wanted.get(m)
        if expected is None:
            computed_only += 1
            continue
        compared += 1
        if first is None:
            first = m
        last = m
        if value != expected:
            mismatches.append((m, value, expected))
    return ComparisonReport(
        first_index=first,
        last_index=last,
        compared=compared,
        mismatches=mismatches,
        computed_only=computed_only,
        reference_only=len(wanted) - compared,
    )
