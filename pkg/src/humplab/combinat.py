"""Exact integer primitives: factorials, binomials, Catalan and Motzkin numbers.

Every count in the package is a plain Python ``int``, so nothing overflows.
"""
from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "ConsistencyError",
    "CapExceeded",
    "exact_div",
    "factorial",
    "binomial",
    "catalan",
    "motzkin",
    "motzkin_table",
]


class ConsistencyError(ArithmeticError):
    """An exact division or parity check failed.

    Every closed form in the package is integral. Hitting this means a
    formula was mis-transcribed or was used outside its valid range.
    """


class CapExceeded(ValueError):
    """A brute-force route was asked for a size beyond its configured cap."""


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.

    The convention lets truncated sums like ``sum_{j>=1}`` run past their
    natural end without special-casing. Negative ``n`` is rejected.
    """
    if n < 0:
        raise ValueError(f"binomial with negative upper index n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    return exact_div(math.comb(2 * n, n), n + 1, "catalan")


@lru_cache(maxsize=8)
def _motzkin_upto(n: int) -> tuple[int, ...]:
    # first-return decomposition: flat step, or U (Motzkin_{k-2}) D then Motzkin_{n-k}
    m = [1, 1]
    for i in range(2, n + 1):
        m.append(m[i - 1] + sum(m[k - 2] * m[i - k] for k in range(2, i + 1)))
    return tuple(m[: n + 1])


def motzkin_table(n: int) -> tuple[int, ...]:
    """Return ``(M_0, ..., M_n)``."""
    if n < 0:
        raise ValueError(f"motzkin index must be >= 0, got {n}")
    # round up so repeated calls at nearby n share one cache entry
    size = max(32, 1 << (n.bit_length()))
    return _motzkin_upto(size)[: n + 1]


def motzkin(n: int) -> int:
    return motzkin_table(n)[n]
