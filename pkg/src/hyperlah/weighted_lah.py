"""Weight-refined Lah numbers W(l, n, m) by five independent methods.

W(l, n, m) counts partitions of {1..n} into m linearly ordered blocks
whose total weight (elements preceding something larger that heads the
block; see `hyperlah.partitions`) is exactly l.  The five routes are:

  enum    exhaustive enumeration (compiled kernel or pure fallback)
  rec_a   recurrence on whether 1 heads its block
  rec_b   compact four-term recurrence derived from rec_a
  closed  double alternating sum over Stirling numbers
  genfun  coefficient extraction from a truncated bivariate series

All five agree on their shared domains; the test suite and the
`crosscheck` CLI command verify this exhaustively at small sizes.
"""

from __future__ import annotations

from functools import lru_cache

from . import _kernels
from .combinat import binomial, factorial, stirling1_unsigned
from .errors import CapacityError
from .series import series_log_term

__all__ = ["WLAH_METHODS", "DEFAULT_ENUM_CAP", "wlah", "wlah_table"]

WLAH_METHODS = ("enum", "rec_a", "rec_b", "closed", "genfun")

# n=10 already means ~24M partitions across all m; enumeration beyond
# that is a deliberate opt-in.
DEFAULT_ENUM_CAP = 10


def wlah(l: int, n: int, m: int, method: str = "closed",
         enum_cap: int = DEFAULT_ENUM_CAP) -> int:
    """W(l, n, m), computed by the chosen method.

    Requires n, m >= 1.  Returns 0 outside the support 0 <= l <= n - m
    (in particular whenever m > n).
    """
    if n < 1 or m < 1:
        raise ValueError(f"wlah requires n, m >= 1, got ({n}, {m})")
    if l < 0 or m > n or l > n - m:
        return 0
    if method == "enum":
        if n > enum_cap:
            raise CapacityError(
                f"enumeration for n={n} exceeds the cap of {enum_cap}; "
                f"raise enum_cap to force it"
            )
        return _enum_histogram(n, m)[l]
    if method == "rec_a":
        return _wlah_rec_a(l, n, m)
    if method == "rec_b":
        return _wlah_rec_b(l, n, m)
    if method == "closed":
        return _wlah_closed(l, n, m)
    if method == "genfun":
        return _wlah_genfun(l, n, m)
    raise ValueError(f"unknown method {method!r}; expected one of {WLAH_METHODS}")


def wlah_table(n: int, method: str = "rec_b") -> dict:
    """Full table for ground-set size n: {m: [W(0,n,m), ..., W(n-m,n,m)]}."""
    if n < 1:
        raise ValueError(f"wlah_table requires n >= 1, got {n}")
    return {
        m: [wlah(l, n, m, method=method) for l in range(n - m + 1)]
        for m in range(1, n + 1)
    }


@lru_cache(maxsize=None)
def _enum_histogram(n, m):
    return tuple(_kernels.weight_histogram(n, m))


@lru_cache(maxsize=None)
def _wlah_rec_a(l, n, m):
    # Splits on the position of the element 1.  If 1 does not head its
    # block, deleting it drops the weight by one and leaves n-1 places
    # to reinsert it; if it heads a block of j+1 elements, that block
    # weighs nothing and the rest is a smaller instance.
    if l < 0 or m < 1 or m > n or l > n - m:
        return 0
    if m == 1:
        return factorial(n - 1)
    if m == n:
        return 1
    total = (n - 1) * _wlah_rec_a(l - 1, n - 1, m)
    for j in range(n):
        total += binomial(n - 1, j) * factorial(j) * _wlah_rec_a(l, n - 1 - j, m - 1)
    return total


@lru_cache(maxsize=None)
def _wlah_rec_b(l, n, m):
    if l < 0 or m < 1 or m > n or l > n - m:
        return 0
    if m == 1:
        return factorial(n - 1)
    if m == n:
        return 1
    return (
        (n - 1) * _wlah_rec_b(l - 1, n - 1, m)
        + (n - 1) * _wlah_rec_b(l, n - 1, m)
        + _wlah_rec_b(l, n - 1, m - 1)
        - (n - 1) * (n - 2) * _wlah_rec_b(l - 1, n - 2, m)
    )


def _wlah_closed(l, n, m):
    total = 0
    for j in range(l + 1):
        cj = binomial(n, j) * binomial(m + l - j - 1, m - 1)
        if cj == 0:
            continue
        for i in range(n - m + 1):
            if j - i < 0:
                break  # later i only make it more negative
            a = stirling1_unsigned(j, j - i)
            if a == 0:
                continue
            b = m + i - j
            if b < 0 or b > n - j:
                continue
            term = cj * a * stirling1_unsigned(n - j, b)
            total += -term if (i + j) & 1 else term
    return total


@lru_cache(maxsize=None)
def _genfun_power(n, m):
    # [x^n s^l] only needs x-degrees to n and s-degrees to n-m
    return series_log_term(n, n - m) ** m


def _wlah_genfun(l, n, m):
    value = _genfun_power(n, m).coeff(n, l) * (factorial(n) // factorial(m))
    if value.denominator != 1:
        raise RuntimeError(
            f"series extraction for W({l},{n},{m}) is not an integer: {value}"
        )
    return value.numerator
