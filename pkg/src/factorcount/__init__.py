"""Exact counting of integer factorizations.

Counts m = m1 * ... * mk under three views: ordered tuples, nondecreasing
tuples (multiplicative partitions), and multiplicity-patterned products over
distinct bases, each with a lower bound on the factors. Closed forms cover up
to four factors; divisor recursions cover everything; a brute-force oracle
keeps both honest; sieve-backed tables batch any of them over a range.

All results are Python ints and therefore exact at any magnitude.
"""

from .arithmetic import (
    MAX_INPUT,
    BudgetError,
    PrimeSignature,
    binomial,
    divisors,
    factorize,
    floor_div,
    integer_nth_root,
    is_nth_power,
    is_prime,
    tau,
)
from .closed_forms import ExactDivisionError, MultiplicityPattern

__version__ = "0.1.0"

__all__ = [
    "MAX_INPUT",
    "BudgetError",
    "ExactDivisionError",
    "MultiplicityPattern",
    "PrimeSignature",
    "binomial",
    "divisors",
    "factorize",
    "floor_div",
    "integer_nth_root",
    "is_nth_power",
    "is_prime",
    "tau",
    "__version__",
]
