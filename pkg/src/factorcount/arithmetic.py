"""Exact integer arithmetic, factorization and divisor utilities.

Everything here is pure and exact: counts are Python ints (so they never
overflow), roots are extracted by integer bisection, and division semantics
are pinned down explicitly where the formulas depend on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

#: Largest m accepted for factorization queries (64-bit unsigned).
MAX_INPUT = 2**64 - 1

# Deterministic Miller-Rabin witness set, sufficient for all n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class BudgetError(ValueError):
    """A request exceeded a configured resource budget (sieve size, oracle caps)."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, valid for all n below 2**64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSignature:
    """Prime decomposition of a positive integer.

    ``factors`` holds (prime, exponent) pairs with strictly increasing primes
    and exponents >= 1; the empty tuple represents 1. Construction validates
    the invariants, so a held instance can be trusted.
    """

    factors: tuple[tuple[int, int], ...]
    value: int

    def __post_init__(self) -> None:
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be distinct and strictly increasing")
            if exponent < 1:
                raise ValueError(f"exponent {exponent} for prime {prime} must be >= 1")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            previous = prime
            product *= prime**exponent
        if product != self.value:
            raise ValueError(f"factors multiply to {product}, not {self.value}")

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(exponent for _, exponent in self.factors)


def factorize(m: int) -> PrimeSignature:
    """Prime signature of m, by trial division (2, 3, then 6k+-1 up to sqrt(m)).

    Accepts 1 <= m < 2**64; factorize(1) is the empty signature.
    """
    if m < 1:
        raise ValueError(f"m={m} must be >= 1")
    if m > MAX_INPUT:
        raise ValueError(f"m={m} exceeds the 64-bit input domain")
    value = m
    factors: list[tuple[int, int]] = []

    def strip(p: int, n: int) -> int:
        count = 0
        while n % p == 0:
            n //= p
            count += 1
        if count:
            factors.append((p, count))
        return n

    m = strip(2, m)
    m = strip(3, m)
    d = 5
    while d * d <= m:
        m = strip(d, m)
        m = strip(d + 2, m)
        d += 6
    if m > 1:
        factors.append((m, 1))
    return PrimeSignature(tuple(factors), value)


def tau(signature: PrimeSignature) -> int:
    """Number of divisors: the product of (exponent + 1)."""
    count = 1
    for _, exponent in signature.factors:
        count *= exponent + 1
    return count


def divisors(signature: PrimeSignature) -> list[int]:
    """All divisors of the signature's value, in increasing order."""
    out = [1]
    for prime, exponent in signature.factors:
        powers = []
        q = 1
        for _ in range(exponent):
            q *= prime
            powers.append(q)
        out += [d * q for q in powers for d in out]
    out.sort()
    return out


def integer_nth_root(m: int, n: int) -> int:
    """floor(m ** (1/n)) by integer bisection; never touches floating point."""
    if m < 1:
        raise ValueError(f"m={m} must be >= 1")
    if n < 1:
        raise ValueError(f"n={n} must be >= 1")
    if n == 1 or m == 1:
        return m if n == 1 else 1
    if n == 2:
        return isqrt(m)
    if n >= m.bit_length():
        return 1
    lo = 1
    hi = 1 << (m.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_nth_power(m: int, n: int) -> bool:
    """True iff m is a perfect n-th power, decided by exact root extraction."""
    return integer_nth_root(m, n) ** n == m


def binomial(n: int, k: int) -> int:
    """C(n, k), exactly; 0 when k > n. Both arguments must be >= 0."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be >= 0")
    return comb(n, k)


def floor_div(a: int, b: int) -> int:
    """floor(a / b), rounding toward -inf even for negative a; b must be > 0.

    floor_div(-1, 2) == -1, which the 4-factor closed form relies on.
    """
    if b <= 0:
        raise ValueError(f"divisor {b} must be > 0")
    return a // b
