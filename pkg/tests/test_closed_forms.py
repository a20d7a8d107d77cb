import random

import pytest

from factorcount import closed_forms, oracle
from factorcount.arithmetic import divisors, factorize, tau
from factorcount.closed_forms import (
    ExactDivisionError,
    MultiplicityPattern,
    _exact_div,
    nondecreasing_count,
    ordered_count,
    pattern_count,
    power_divisor_count,
    quadruple_numerator,
    tau_sum_over_divisors,
    triple_numerator,
)


def test_multiplicity_pattern_normalizes_and_validates():
    assert MultiplicityPattern((2, 1)).parts == (1, 2)
    assert MultiplicityPattern.of(3, 1).parts == (1, 3)
    assert MultiplicityPattern.of(1, 1, 2).k == 4
    assert list(MultiplicityPattern.of(2, 2)) == [2, 2]
    with pytest.raises(ValueError):
        MultiplicityPattern(())
    with pytest.raises(ValueError):
        MultiplicityPattern((0, 1))


def test_ordered_count_examples():
    assert ordered_count(factorize(8), 3) == 10
    assert ordered_count(factorize(12), 2) == 6  # equals tau(12)
    for m in (2, 9, 100, 360):
        assert ordered_count(factorize(m), 1) == 1
    assert ordered_count(factorize(16), 2, 2) == 3
    assert ordered_count(factorize(13), 2, 2) == 0


def test_ordered_count_rejects_bad_arguments():
    with pytest.raises(ValueError):
        ordered_count(factorize(1), 2)
    with pytest.raises(ValueError):
        ordered_count(factorize(12), 0)
    with pytest.raises(ValueError):
        ordered_count(factorize(12), 2, 3)


def test_ordered_min2_total_over_lengths_is_power_of_two():
    sig = factorize(2**10)
    assert sum(ordered_count(sig, k, 2) for k in range(1, 11)) == 2**9


def test_ordered_count_matches_oracle():
    for m in range(2, 401):
        sig = factorize(m)
        for k in range(1, 6):
            for lo in (1, 2):
                assert ordered_count(sig, k, lo) == oracle.count_ordered(m, k, lo), (m, k, lo)


def test_ordered_count_is_multiplicative_on_coprime_pairs():
    rng = random.Random(7)
    pairs = 0
    while pairs < 100:
        a = rng.randrange(2, 1001)
        b = rng.randrange(2, 1001)
        sig_a, sig_b = factorize(a), factorize(b)
        if set(p for p, _ in sig_a.factors) & set(p for p, _ in sig_b.factors):
            continue
        for k in (2, 3, 4):
            left = ordered_count(factorize(a * b), k)
            assert left == ordered_count(sig_a, k) * ordered_count(sig_b, k)
        pairs += 1


def test_nondecreasing_count_examples():
    assert nondecreasing_count(factorize(12), 3, 1) == 4
    assert nondecreasing_count(factorize(36), 4, 1) == 9
    assert nondecreasing_count(factorize(16), 4, 1) == 5
    assert nondecreasing_count(factorize(36), 3, 2) == 3
    assert nondecreasing_count(factorize(12), 2, 1) == 3
    # exponent 1 in the k=4 formula needs floor((1 - 2) / 2) == -1
    assert nondecreasing_count(factorize(12), 4, 1) == 4
    for m in (2, 9, 100, 360):
        for lo in (1, 2):
            assert nondecreasing_count(factorize(m), 1, lo) == 1


def test_nondecreasing_count_rejects_bad_arguments():
    with pytest.raises(ValueError):
        nondecreasing_count(factorize(1), 3)
    with pytest.raises(ValueError):
        nondecreasing_count(factorize(12), 5)
    with pytest.raises(ValueError):
        nondecreasing_count(factorize(12), 0)
    with pytest.raises(ValueError):
        nondecreasing_count(factorize(12), 3, 3)


def test_nondecreasing_count_matches_oracle():
    for m in range(2, 401):
        sig = factorize(m)
        for k in (1, 2, 3, 4):
            for lo in (1, 2):
                expected = len(oracle.enumerate_nondecreasing(m, k, lo))
                assert nondecreasing_count(sig, k, lo) == expected, (m, k, lo)


def test_pattern_count_examples():
    # base 1 is allowed: 12 = 12 * 1**2 as well as 3 * 2**2
    assert pattern_count(factorize(12), (1, 2)) == 2
    assert pattern_count(factorize(16), (1, 3)) == 1
    assert pattern_count(factorize(36), (2, 2)) == 2
    assert pattern_count(factorize(64), (3,)) == 1
    assert pattern_count(factorize(81), (4,)) == 1


def test_pattern_count_rejects_unsupported_patterns():
    with pytest.raises(ValueError):
        pattern_count(factorize(12), (1, 1, 1))
    with pytest.raises(ValueError):
        pattern_count(factorize(12), (1, 1, 3))
    with pytest.raises(ValueError):
        pattern_count(factorize(1), (1, 2))


def test_pattern_count_matches_oracle_on_supported_patterns():
    patterns = sorted(closed_forms.SUPPORTED_PATTERNS)
    for m in range(2, 301):
        sig = factorize(m)
        for parts in patterns:
            expected = oracle.count_by_pattern(m, parts, 1)
            assert pattern_count(sig, parts) == expected, (m, parts)
        assert pattern_count(sig, MultiplicityPattern.of(1, 2)) == oracle.count_by_pattern(m, (1, 2), 1)


def test_ordered_counts_decompose_over_patterns():
    """k! / prod(multiplicities!) ordered tuples per patterned factorization."""
    for m in range(2, 2001):
        sig = factorize(m)
        triple = 6 * oracle.count_by_pattern(m, (1, 1, 1), 1)
        triple += 3 * pattern_count(sig, (1, 2))
        triple += pattern_count(sig, (3,))
        assert ordered_count(sig, 3) == triple, m
        quad = 24 * oracle.count_by_pattern(m, (1, 1, 1, 1), 1)
        quad += 12 * pattern_count(sig, (1, 1, 2))
        quad += 4 * pattern_count(sig, (1, 3))
        quad += 6 * pattern_count(sig, (2, 2))
        quad += pattern_count(sig, (4,))
        assert ordered_count(sig, 4) == quad, m


def test_numerators_are_divisible_on_a_small_range():
    for m in range(2, 5001):
        exps = factorize(m).exponents
        assert triple_numerator(exps) % closed_forms.TRIPLE_DENOMINATOR == 0
        assert quadruple_numerator(exps) % closed_forms.QUADRUPLE_DENOMINATOR == 0


def test_exact_div_raises_on_remainder():
    assert _exact_div(24, 6) == 4
    with pytest.raises(ExactDivisionError):
        _exact_div(25, 6)


def test_divisor_sum_examples():
    assert tau_sum_over_divisors(factorize(12)) == 18  # 1+2+2+3+4+6
    assert tau_sum_over_divisors(factorize(1)) == 1
    assert tau_sum_over_divisors(factorize(49)) == 6
    assert power_divisor_count(factorize(12), 2) == 2  # 1 and 4
    assert power_divisor_count(factorize(1), 3) == 1
    assert power_divisor_count(factorize(64), 3) == 3  # 1, 8, 64


def test_divisor_sums_match_direct_summation():
    limit = 10_000
    tau_of = [0] + [tau(factorize(n)) for n in range(1, limit + 1)]
    powers = {n: {b**n for b in range(1, limit + 1) if b**n <= limit} for n in (2, 3, 4)}
    for m in range(1, limit + 1):
        sig = factorize(m)
        ds = divisors(sig)
        assert tau_sum_over_divisors(sig) == sum(tau_of[d] for d in ds)
        for power in (2, 3, 4):
            direct = sum(1 for d in ds if d in powers[power])
            assert power_divisor_count(sig, power) == direct


def test_power_divisor_count_rejects_power_one():
    with pytest.raises(ValueError):
        power_divisor_count(factorize(12), 1)


def test_exponent_helpers_handle_the_empty_signature():
    from factorcount.closed_forms import nondecreasing_from_exponents, ordered_from_exponents

    for k in (1, 2, 3, 4):
        assert nondecreasing_from_exponents((), k, 1) == 1
        assert nondecreasing_from_exponents((), k, 2) == 0
    for k in (1, 3, 7):
        assert ordered_from_exponents((), k, 1) == 1
        assert ordered_from_exponents((), k, 2) == 0


def test_random_large_values_match_recursion():
    """Spot the closed forms against the divisor recursion well beyond the grids."""
    from factorcount import recurrences

    rng = random.Random(2024)
    for _ in range(150):
        m = rng.randrange(2, 1_000_000)
        sig = factorize(m)
        for k in (2, 3, 4):
            for lo in (1, 2):
                assert nondecreasing_count(sig, k, lo) == recurrences.nondecreasing_count(m, k, lo)
        k = rng.randrange(1, 9)
        for lo in (1, 2):
            assert ordered_count(sig, k, lo) == recurrences.ordered_count(m, k, lo)
