"""Divisor recursions for factorization counts with arbitrary k and lower bound.

These answer every (m, k, min_factor) query; the closed forms are the fast
path for k <= 4. The additive partition function lives here too, because
counting factorizations of a prime power reduces to it.

All counting functions are pure. Memoization goes through an explicit mapping
so callers can share the module-wide store (default), supply their own, or
disable caching entirely with ``memo=None``; the stored values are write-once,
so concurrent readers always observe the same results.
"""

from __future__ import annotations

from functools import lru_cache
from typing import MutableMapping

from .arithmetic import divisors, factorize

MemoStore = MutableMapping[tuple[int, int, int], int]

_SHARED_NONDECREASING: dict[tuple[int, int, int], int] = {}
_SHARED_ORDERED: dict[tuple[int, int, int], int] = {}
_UNSET = object()  # distinguishes "use the shared memo" from "no memo" (None)


def clear_caches() -> None:
    """Drop all shared memo state (useful for cold benchmarking)."""
    _SHARED_NONDECREASING.clear()
    _SHARED_ORDERED.clear()
    _divisor_tuple.cache_clear()
    _partition.cache_clear()


@lru_cache(maxsize=65536)
def _divisor_tuple(m: int) -> tuple[int, ...]:
    return tuple(divisors(factorize(m)))


def _resolve(memo: object, shared: MemoStore) -> MemoStore | None:
    if memo is _UNSET:
        return shared
    return memo  # type: ignore[return-value]


def _validate_query(m: int, k: int, min_factor: int) -> None:
    if m < 1 or k < 1 or min_factor < 1:
        raise ValueError(f"m={m}, k={k}, min_factor={min_factor} must all be >= 1")


def _nondecreasing(m: int, k: int, lo: int, memo: MemoStore | None) -> int:
    if k == 0:
        return 1 if m == 1 else 0
    if lo > m:
        return 0
    if k == 1:
        return 1
    if lo**k > m:
        return 0
    key = (m, k, lo)
    if memo is not None:
        cached = memo.get(key)
        if cached is not None:
            return cached
    # the next factor d is the smallest, so the remaining k-1 are >= d
    total = 0
    for d in _divisor_tuple(m):
        if d < lo:
            continue
        if d**k > m:
            break
        total += _nondecreasing(m // d, k - 1, d, memo)
    if memo is not None:
        memo[key] = total
    return total


def _ordered(m: int, k: int, lo: int, memo: MemoStore | None) -> int:
    if k == 0:
        return 1 if m == 1 else 0
    if lo > m:
        return 0
    if k == 1:
        return 1
    key = (m, k, lo)
    if memo is not None:
        cached = memo.get(key)
        if cached is not None:
            return cached
    total = 0
    for d in _divisor_tuple(m):
        if d >= lo:
            total += _ordered(m // d, k - 1, lo, memo)
    if memo is not None:
        memo[key] = total
    return total


def nondecreasing_count(m: int, k: int, min_factor: int = 1, memo: object = _UNSET) -> int:
    """Factorizations of m into exactly k factors m1 <= ... <= mk, all >= min_factor.

    Infeasible queries (for example min_factor**k > m) return 0 rather than
    raising. nondecreasing_count(1, k, 1) is 1: the all-ones tuple.
    """
    _validate_query(m, k, min_factor)
    return _nondecreasing(m, k, min_factor, _resolve(memo, _SHARED_NONDECREASING))


def ordered_count(m: int, k: int, min_factor: int = 1, memo: object = _UNSET) -> int:
    """Ordered k-tuples of factors >= min_factor whose product is m."""
    _validate_query(m, k, min_factor)
    return _ordered(m, k, min_factor, _resolve(memo, _SHARED_ORDERED))


def nondecreasing_count_by_shift(
    m: int, k: int, min_factor: int, memo: object = _UNSET
) -> int:
    """Same count as nondecreasing_count, via stripping the forced smallest factors.

    A nondecreasing tuple whose factors are >= min_factor starts with i copies
    of min_factor itself (0 <= i <= s, where min_factor**s exactly divides m)
    followed by k - i factors >= min_factor + 1. Summing the stripped
    subproblems reproduces the count; this is a cross-check path, kept
    independent of the main recursion's bound handling.

    min_factor must be >= 2 (1 divides everything, so s would be infinite).
    """
    _validate_query(m, k, min_factor)
    if min_factor < 2:
        raise ValueError("the shift path needs min_factor >= 2")
    store = _resolve(memo, _SHARED_NONDECREASING)
    s = 0
    rest = m
    while rest % min_factor == 0:
        rest //= min_factor
        s += 1
    total = 0
    reduced = m
    for stripped in range(min(k, s) + 1):
        if stripped:
            reduced //= min_factor
        total += _nondecreasing(reduced, k - stripped, min_factor + 1, store)
    return total


def nondecreasing_from_min2(m: int, k: int, memo: object = _UNSET) -> int:
    """Lower-bound-1 count of k factors, assembled from lower-bound-2 counts.

    A nondecreasing k-tuple with factors >= 1 is a tuple with factors >= 2
    padded by leading 1s, so summing the >= 2 counts over lengths 1..k equals
    nondecreasing_count(m, k, 1) for every m > 1.
    """
    if m <= 1:
        raise ValueError(f"m={m} must be > 1")
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    store = _resolve(memo, _SHARED_NONDECREASING)
    return sum(_nondecreasing(m, i, 2, store) for i in range(1, k + 1))


def nondecreasing_total(m: int, min_factor: int = 2, memo: object = _UNSET) -> int:
    """Factorizations of m > 1 into any number of nondecreasing factors >= min_factor.

    min_factor must be >= 2: allowing 1 pads any factorization indefinitely
    and the total diverges. The tuple length is bounded by log2(m).
    """
    if m <= 1:
        raise ValueError(f"m={m} must be > 1")
    if min_factor < 2:
        raise ValueError("all-length totals need min_factor >= 2")
    store = _resolve(memo, _SHARED_NONDECREASING)
    total = 0
    k = 1
    while min_factor**k <= m:
        total += _nondecreasing(m, k, min_factor, store)
        k += 1
    return total


def ordered_total(m: int, min_factor: int = 2, memo: object = _UNSET) -> int:
    """Ordered factorizations of m > 1 into any number of factors >= min_factor (>= 2)."""
    if m <= 1:
        raise ValueError(f"m={m} must be > 1")
    if min_factor < 2:
        raise ValueError("all-length totals need min_factor >= 2")
    store = _resolve(memo, _SHARED_ORDERED)
    total = 0
    k = 1
    while min_factor**k <= m:
        total += _ordered(m, k, min_factor, store)
        k += 1
    return total


@lru_cache(maxsize=None)
def _partition(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    if k == n or k == 1:
        return 1
    # subtract 1 from each of the k parts: a partition of n - k into <= k parts
    return sum(_partition(n - k, i) for i in range(k + 1))


def partition_count(n: int, k: int) -> int:
    """Partitions of n into exactly k positive parts (nondecreasing sums).

    partition_count(0, 0) is 1; more parts than units gives 0.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    return _partition(n, k)
