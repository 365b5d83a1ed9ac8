"""Exact integer combinatorics: factorials, binomials, Stirling, Eulerian, Lah.

Everything here is computed in arbitrary-precision integer arithmetic;
no value is ever rounded.  Triangular families are memoized, which is
observably pure (results do not depend on call order).
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "factorial",
    "binomial",
    "stirling1_unsigned",
    "eulerian",
    "lah",
    "sym_range_product",
]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, r: int) -> int:
    """Binomial coefficient C(n, r) for any integer n and r >= 0.

    For n >= 0 this is the usual count (0 when r > n).  For negative n
    it is the generalized value n(n-1)...(n-r+1)/r!, which is exact in
    integers.
    """
    if r < 0:
        raise ValueError(f"binomial requires r >= 0, got {r}")
    if n >= 0:
        return math.comb(n, r)
    num = 1
    for i in range(r):
        num *= n - i
    return num // math.factorial(r)


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, r: int) -> int:
    """Unsigned Stirling number of the first kind [n, r].

    Counts permutations of n elements with exactly r cycles; 0 when
    r > n, and [0, 0] = 1.
    """
    if n < 0 or r < 0:
        raise ValueError(f"stirling1_unsigned requires n, r >= 0, got ({n}, {r})")
    if r > n:
        return 0
    if n == 0:
        return 1
    if r == 0:
        return 0
    return stirling1_unsigned(n - 1, r - 1) + (n - 1) * stirling1_unsigned(n - 1, r)


@lru_cache(maxsize=None)
def eulerian(m: int, j: int) -> int:
    """Eulerian number A(m, j): permutations of {1..m} with j descents.

    Convention: A(0, 0) = 1, and A(m, j) = 0 when j < 0 or (m >= 1 and
    j >= m).
    """
    if m < 0:
        raise ValueError(f"eulerian requires m >= 0, got {m}")
    if j < 0:
        return 0
    if m == 0:
        return 1 if j == 0 else 0
    if j >= m:
        return 0
    return (j + 1) * eulerian(m - 1, j) + (m - j) * eulerian(m - 1, j - 1)


def lah(n: int, m: int) -> int:
    """Lah number L(n, m): partitions of {1..n} into m linearly ordered blocks.

    Equals n!/m! * C(n-1, m-1); 0 when m > n.
    """
    if n < 1 or m < 1:
        raise ValueError(f"lah requires n, m >= 1, got ({n}, {m})")
    if m > n:
        return 0
    return math.factorial(n) // math.factorial(m) * math.comb(n - 1, m - 1)


def sym_range_product(a: int, b: int, u: int) -> int:
    """Sum of products of all u-element subsets of the integer interval [a, b].

    The elementary symmetric polynomial e_u evaluated at a, a+1, ..., b.
    Returns 1 when u = 0 (empty product) and 0 when u exceeds the
    interval length.
    """
    if u < 0:
        raise ValueError(f"sym_range_product requires u >= 0, got {u}")
    if u == 0:
        return 1
    if u > b - a + 1:
        return 0
    e = [1] + [0] * u
    for x in range(a, b + 1):
        for i in range(u, 0, -1):
            e[i] += x * e[i - 1]
    return e[u]
