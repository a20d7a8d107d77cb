"""Brute-force enumeration of factorizations: the repository's ground truth.

Deliberately simple and unoptimized, and deliberately independent: nothing
here touches the closed forms or the memoized recursions, divisors are found
by plain trial division, and counting happens by walking actual tuples
wherever feasible. Budgets (FACTORCOUNT_ORACLE_MAX_M / FACTORCOUNT_ORACLE_MAX_K
environment variables) keep runaway queries from eating the machine.
"""

from __future__ import annotations

import os
from collections import Counter
from math import factorial
from typing import Iterable

from .arithmetic import BudgetError

DEFAULT_MAX_M = 10**6
DEFAULT_MAX_K = 8


def max_m() -> int:
    """Largest m the oracle will enumerate (FACTORCOUNT_ORACLE_MAX_M)."""
    return int(os.environ.get("FACTORCOUNT_ORACLE_MAX_M", DEFAULT_MAX_M))


def max_k() -> int:
    """Largest explicit k the oracle will enumerate (FACTORCOUNT_ORACLE_MAX_K)."""
    return int(os.environ.get("FACTORCOUNT_ORACLE_MAX_K", DEFAULT_MAX_K))


def _validate(m: int, k: int, min_factor: int) -> None:
    if m < 1 or k < 1 or min_factor < 1:
        raise ValueError(f"m={m}, k={k}, min_factor={min_factor} must all be >= 1")
    if m > max_m():
        raise BudgetError(
            f"oracle refuses m={m} > {max_m()}; raise FACTORCOUNT_ORACLE_MAX_M to override"
        )
    if k > max_k():
        raise BudgetError(
            f"oracle refuses k={k} > {max_k()}; raise FACTORCOUNT_ORACLE_MAX_K to override"
        )


def _divisors(m: int) -> list[int]:
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    large.reverse()
    return small + large


def _enum(m: int, k: int, lo: int) -> list[tuple[int, ...]]:
    if k == 1:
        return [(m,)] if m >= lo else []
    out: list[tuple[int, ...]] = []
    for d in _divisors(m):
        if d < lo:
            continue
        if d**k > m:
            break
        for rest in _enum(m // d, k - 1, d):
            out.append((d, *rest))
    return out


def enumerate_nondecreasing(m: int, k: int, min_factor: int = 1) -> list[tuple[int, ...]]:
    """Every tuple (m1 <= ... <= mk) with all factors >= min_factor and product m.

    Tuples come out in lexicographic order, each exactly once.
    """
    _validate(m, k, min_factor)
    return _enum(m, k, min_factor)


def count_nondecreasing(m: int, k: int, min_factor: int = 1) -> int:
    """len(enumerate_nondecreasing(...)), for callers that only want the count."""
    return len(enumerate_nondecreasing(m, k, min_factor))


def _arrangements(factors: tuple[int, ...]) -> int:
    ways = factorial(len(factors))
    for repeats in Counter(factors).values():
        ways //= factorial(repeats)
    return ways


def _count_ordered_direct(m: int, k: int, lo: int) -> int:
    # every leaf of this recursion is one ordered tuple
    if k == 1:
        return 1 if m >= lo else 0
    return sum(_count_ordered_direct(m // d, k - 1, lo) for d in _divisors(m) if d >= lo)


def count_ordered(m: int, k: int, min_factor: int = 1, method: str = "permutations") -> int:
    """Ordered k-tuples of factors >= min_factor with product m.

    method "permutations" sums the distinct arrangements of each nondecreasing
    tuple; method "direct" recursively walks every ordered tuple. The two are
    compared against each other in the tests.
    """
    _validate(m, k, min_factor)
    if method == "permutations":
        return sum(_arrangements(t) for t in _enum(m, k, min_factor))
    if method == "direct":
        return _count_ordered_direct(m, k, min_factor)
    raise ValueError(f"unknown method {method!r}")


def count_by_pattern(m: int, pattern: Iterable[int], min_factor: int = 1) -> int:
    """Factorizations of m whose multiset of factor multiplicities equals `pattern`.

    The pattern is any iterable of multiplicities; (1, 2) picks out the tuples
    with one repeated base and one single base, e.g. (1, 1, 12) and (2, 2, 3)
    for m = 12.
    """
    parts = tuple(sorted(pattern))
    if not parts or parts[0] < 1:
        raise ValueError(f"pattern {parts} must be nonempty with parts >= 1")
    k = sum(parts)
    _validate(m, k, min_factor)
    hits = 0
    for factors in _enum(m, k, min_factor):
        if tuple(sorted(Counter(factors).values())) == parts:
            hits += 1
    return hits


def count_all_lengths(m: int, min_factor: int = 2, ordered: bool = False) -> int:
    """Factorizations of m > 1 into any number of factors >= min_factor.

    min_factor must be >= 2, which bounds the tuple length by log2(m) and
    keeps the total finite; the derived lengths are exempt from the k budget.
    """
    if m <= 1:
        raise ValueError(f"m={m} must be > 1")
    if min_factor < 2:
        raise ValueError("all-length totals need min_factor >= 2")
    if m > max_m():
        raise BudgetError(
            f"oracle refuses m={m} > {max_m()}; raise FACTORCOUNT_ORACLE_MAX_M to override"
        )
    total = 0
    k = 1
    while min_factor**k <= m:
        tuples = _enum(m, k, min_factor)
        total += sum(_arrangements(t) for t in tuples) if ordered else len(tuples)
        k += 1
    return total
