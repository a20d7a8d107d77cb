"""Closed-form factorization counts for small numbers of factors.

Ordered counts are products of binomials over the prime exponents (with an
inclusion-exclusion sum when factors of 1 are excluded); nondecreasing counts
exist for up to four factors. Every rational-looking expression is assembled
as one integer numerator over a fixed denominator and the division is checked
exactly, so a transcription slip fails loudly instead of corrupting output.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .arithmetic import PrimeSignature

#: Denominators of the assembled 3- and 4-factor numerators.
TRIPLE_DENOMINATOR = 6
QUADRUPLE_DENOMINATOR = 24

#: Multiplicity multisets with a closed form; anything else needs the oracle.
SUPPORTED_PATTERNS = frozenset({(1, 2), (3,), (1, 1, 2), (1, 3), (2, 2), (4,)})


class ExactDivisionError(ArithmeticError):
    """A closed-form numerator failed its divisibility check (implementation bug)."""


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ExactDivisionError(
            f"{numerator} is not divisible by {denominator}; "
            "a closed-form term was assembled wrongly"
        )
    return quotient


@dataclass(frozen=True)
class MultiplicityPattern:
    """Multiset of factor multiplicities, stored as a sorted tuple.

    The pattern (1, 2) refines 3-factor counts down to products x * y**2 with
    x != y; its sum is the tuple length k of the factorizations it refines.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a pattern needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("multiplicities must be >= 1")
        ordered = tuple(sorted(self.parts))
        if ordered != self.parts:
            object.__setattr__(self, "parts", ordered)

    @classmethod
    def of(cls, *parts: int) -> "MultiplicityPattern":
        return cls(tuple(parts))

    @property
    def k(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


def _is_power(exponents: Sequence[int], n: int) -> int:
    """1 if the decomposed value is a perfect n-th power, else 0."""
    return 1 if all(a % n == 0 for a in exponents) else 0


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _divisor_count(exponents: Sequence[int]) -> int:
    return prod(a + 1 for a in exponents)


def _power_divisor_count(exponents: Sequence[int], power: int) -> int:
    """How many divisors are perfect `power`-th powers: prod((a + power) // power)."""
    return prod((a + power) // power for a in exponents)


def ordered_from_exponents(exponents: Sequence[int], k: int, min_factor: int = 1) -> int:
    """Ordered k-tuple count from the prime exponents alone.

    min_factor 1 is a plain product of binomials; min_factor 2 excludes
    factors of 1 by inclusion-exclusion over which positions hold a 1.
    """
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    if min_factor not in (1, 2):
        raise ValueError("closed ordered counts cover min_factor 1 and 2 only")
    if not exponents:  # value 1: only the all-ones tuple, which needs min_factor 1
        return 1 if min_factor == 1 else 0
    if min_factor == 1:
        return prod(comb(a + k - 1, k - 1) for a in exponents)
    total = 0
    for i in range(k):
        term = comb(k, i) * prod(comb(a + k - i - 1, k - i - 1) for a in exponents)
        total += -term if i % 2 else term
    return total


def triple_numerator(exponents: Sequence[int]) -> int:
    """Numerator of the 3-factor nondecreasing count over denominator 6."""
    ordered_triples = prod(comb(a + 2, 2) for a in exponents)
    square_divisors = _power_divisor_count(exponents, 2)
    return ordered_triples + 3 * square_divisors + 2 * _is_power(exponents, 3)


def quadruple_numerator(exponents: Sequence[int]) -> int:
    """Numerator of the 4-factor nondecreasing count over denominator 24."""
    ordered_quadruples = prod(comb(a + 3, 3) for a in exponents)
    cube_divisors = _power_divisor_count(exponents, 3)
    # sum of divisor-counts tau(value / z**2) over square divisors z**2; the
    # inner (a - 2) // 2 must round toward -inf so exponent 1 contributes 2
    tau_over_squares = prod(((a + 2) // 2) * (a - (a - 2) // 2) for a in exponents)
    numerator = ordered_quadruples + 8 * cube_divisors + 6 * tau_over_squares
    if _is_power(exponents, 2):
        tau_sqrt = prod(a // 2 + 1 for a in exponents)
        numerator += 6 * tau_sqrt - 6 * _ceil_half(tau_sqrt)
        if _is_power(exponents, 4):
            numerator += 9
    return numerator


def nondecreasing_from_exponents(exponents: Sequence[int], k: int, min_factor: int = 1) -> int:
    """Nondecreasing k-tuple count from the prime exponents; k in 1..4.

    min_factor 2 counts come by subtraction: a min-1 k-tuple is a min-2 tuple
    padded with leading 1s, so the min-1 count accumulates min-2 counts over
    lengths 1..k and consecutive min-1 counts differ by exactly the length-k
    min-2 count.
    """
    if min_factor not in (1, 2):
        raise ValueError("closed nondecreasing counts cover min_factor 1 and 2 only")
    if not 1 <= k <= 4:
        raise ValueError(f"no closed nondecreasing count for k={k}; use the recursion")
    if not exponents:  # value 1: only the all-ones tuple, which needs min_factor 1
        return 1 if min_factor == 1 else 0
    if k == 1:
        return 1
    if k == 2:
        pairs = _ceil_half(_divisor_count(exponents))
        return pairs if min_factor == 1 else pairs - 1
    if k == 3:
        triples = _exact_div(triple_numerator(exponents), TRIPLE_DENOMINATOR)
        if min_factor == 1:
            return triples
        return triples - _ceil_half(_divisor_count(exponents))
    quadruples = _exact_div(quadruple_numerator(exponents), QUADRUPLE_DENOMINATOR)
    if min_factor == 1:
        return quadruples
    return quadruples - _exact_div(triple_numerator(exponents), TRIPLE_DENOMINATOR)


def _require_nontrivial(signature: PrimeSignature) -> None:
    if signature.value <= 1:
        raise ValueError("counts are defined for m > 1")


def ordered_count(signature: PrimeSignature, k: int, min_factor: int = 1) -> int:
    """Ordered k-tuples of factors >= min_factor whose product is the value."""
    _require_nontrivial(signature)
    return ordered_from_exponents(signature.exponents, k, min_factor)


def nondecreasing_count(signature: PrimeSignature, k: int, min_factor: int = 1) -> int:
    """Factorizations into exactly k nondecreasing factors >= min_factor; k in 1..4."""
    _require_nontrivial(signature)
    return nondecreasing_from_exponents(signature.exponents, k, min_factor)


def pattern_count(signature: PrimeSignature, pattern: Iterable[int]) -> int:
    """Factorizations into distinct bases whose multiplicity multiset is `pattern`.

    Counts assignments of the multiplicities to bases >= 1: under (1, 2) the
    value 12 admits both 12 * 1**2 and 3 * 2**2. Only the patterns in
    SUPPORTED_PATTERNS have closed forms; others raise ValueError and callers
    should fall back to the oracle.
    """
    _require_nontrivial(signature)
    parts = tuple(sorted(pattern))
    exps = signature.exponents
    if parts == (1, 2):
        return _power_divisor_count(exps, 2) - _is_power(exps, 3)
    if parts == (3,):
        return _is_power(exps, 3)
    if parts == (1, 3):
        return _power_divisor_count(exps, 3) - _is_power(exps, 4)
    if parts == (2, 2):
        if not _is_power(exps, 2):
            return 0
        tau_sqrt = prod(a // 2 + 1 for a in exps)
        return _ceil_half(tau_sqrt) - _is_power(exps, 4)
    if parts == (4,):
        return _is_power(exps, 4)
    if parts == (1, 1, 2):
        # twice the sum of ceil(tau(value / z**2) / 2) over square divisors z**2
        doubled = prod(((a + 2) // 2) * (a - (a - 2) // 2) for a in exps)
        if _is_power(exps, 2):
            doubled += _power_divisor_count(exps, 2)
        pairs_with_square = _exact_div(doubled, 2)
        # pairs_with_square counts m = x*y*z**2 with x <= y; remove y = z and
        # x = z (one x*z**3 representation each), x = y (each square pair
        # appears as both (a,a,b) and (b,b,a), hence twice), and x = y = z
        return (
            pairs_with_square
            - pattern_count(signature, (1, 3))
            - 2 * pattern_count(signature, (2, 2))
            - _is_power(exps, 4)
        )
    raise ValueError(f"no closed form for pattern {parts}; use the oracle")


def tau_sum_over_divisors(signature: PrimeSignature) -> int:
    """Sum of divisor-counts tau(d) over all divisors d: prod of C(exponent + 2, 2)."""
    return prod(comb(a + 2, 2) for a in signature.exponents)


def power_divisor_count(signature: PrimeSignature, power: int) -> int:
    """How many divisors are perfect `power`-th powers (power >= 2)."""
    if power < 2:
        raise ValueError(f"power={power} must be >= 2")
    return _power_divisor_count(signature.exponents, power)
