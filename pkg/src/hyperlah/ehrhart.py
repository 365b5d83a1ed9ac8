"""Ehrhart polynomials of hypersimplices by four independent routes.

The hypersimplex is the slice of the unit cube [0,1]^n by the hyperplane
where the coordinates sum to k; its Ehrhart polynomial E(t) counts the
integer points of the t-fold dilation.  Routes:

  katzman   alternating sum of binomial polynomials in t
  stirling  per-coefficient alternating Stirling-number sums
  wlah      per-coefficient positive sums of weighted Lah numbers
            times Eulerian numbers (manifestly positive)
  oracle    exact interpolation through brute-force lattice counts

All four produce identical polynomials; the wlah route exhibits every
coefficient as a sum of positive terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .combinat import binomial, eulerian, factorial
from .combinat import stirling1_unsigned
from .errors import CapacityError
from .polynomial import Polynomial, interpolate, t_binomial
from .weighted_lah import wlah

__all__ = [
    "EHRHART_METHODS",
    "DEFAULT_DIRECT_CAP",
    "HypersimplexParams",
    "EhrhartResult",
    "ehrhart_katzman",
    "lattice_point_count",
    "ehrhart_interpolated",
    "f_coefficient",
    "ehrhart_coefficient_stirling",
    "ehrhart_coefficient_wlah",
    "cnm_polynomial",
    "ehrhart_polynomial",
]

EHRHART_METHODS = ("katzman", "stirling", "wlah", "oracle")

# box size (t+1)^n above which the direct point enumeration refuses to run
DEFAULT_DIRECT_CAP = 10**8


@dataclass(frozen=True)
class HypersimplexParams:
    """Slice of [0,1]^n at coordinate sum k; nondegenerate for 1 <= k <= n-1."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"hypersimplex requires n >= 1, got n={self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"hypersimplex requires 0 <= k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class EhrhartResult:
    params: HypersimplexParams
    poly: Polynomial
    method: str


def _require_nondegenerate(k, n):
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(
            f"formula route requires 1 <= k <= n-1, got k={k}, n={n}; "
            f"use ehrhart_polynomial for the degenerate cases"
        )


def ehrhart_katzman(k: int, n: int) -> EhrhartResult:
    """Katzman's closed form: an alternating sum of binomial polynomials."""
    _require_nondegenerate(k, n)
    poly = Polynomial()
    for j in range(k):
        term = t_binomial(k - j, n - 1 - j, n - 1) * binomial(n, j)
        poly = poly - term if j & 1 else poly + term
    return EhrhartResult(HypersimplexParams(n, k), poly, "katzman")


def _convolve_upto(a, b, deg):
    out = [0] * (deg + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j > deg:
                    break
                if y:
                    out[i + j] += x * y
    return out


def _power_coefficient(t, n, target):
    # [x^target] (1 + x + ... + x^t)^n by truncated binary powering
    base = [1] * (min(t, target) + 1)
    result = [1]
    while n:
        if n & 1:
            result = _convolve_upto(result, base, target)
        n >>= 1
        if n:
            base = _convolve_upto(base, base, target)
    return result[target] if target < len(result) else 0


def lattice_point_count(k: int, n: int, t: int, strategy: str = "coeff",
                        direct_cap: int = DEFAULT_DIRECT_CAP) -> int:
    """Number of integer points in the t-fold dilation of the slice.

    Equivalently, vectors in {0..t}^n with coordinate sum k*t.
    strategy='coeff' reads the count off a power of the polynomial
    1 + x + ... + x^t; strategy='direct' enumerates the points by
    pruned search (refusing boxes larger than `direct_cap`).
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"lattice_point_count requires 1 <= n and 0 <= k <= n, got ({k}, {n})")
    if t < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {t}")
    if strategy == "coeff":
        return _power_coefficient(t, n, k * t)
    if strategy == "direct":
        if (t + 1) ** n > direct_cap:
            raise CapacityError(
                f"direct enumeration over a box of size (t+1)^n = {(t + 1) ** n} "
                f"exceeds the cap of {direct_cap}"
            )
        return _kernels.count_box_slice(n, t, k * t)
    raise ValueError(f"unknown strategy {strategy!r}; expected 'coeff' or 'direct'")


def ehrhart_interpolated(k: int, n: int) -> EhrhartResult:
    """Oracle route: interpolate exact lattice counts at t = 0, ..., n-1."""
    _require_nondegenerate(k, n)
    points = [(t, lattice_point_count(k, n, t)) for t in range(n)]
    return EhrhartResult(HypersimplexParams(n, k), interpolate(points), "oracle")


def f_coefficient(j: int, n: int, m: int) -> int:
    """Alternating Stirling convolution f(j, n, m).

    Sum over i of (-1)^i [j, j-i] [n-j, m+1+i-j] for 0 <= i <= n-m-1,
    with Stirling terms outside their triangle contributing zero.
    """
    if not 0 <= j <= n or not 0 <= m <= n - 1:
        raise ValueError(f"f_coefficient requires 0 <= j <= n and 0 <= m <= n-1, got ({j}, {n}, {m})")
    total = 0
    for i in range(n - m):
        if j - i < 0:
            break
        a = stirling1_unsigned(j, j - i)
        if a == 0:
            continue
        b = m + 1 + i - j
        if b < 0 or b > n - j:
            continue
        term = a * stirling1_unsigned(n - j, b)
        total += -term if i & 1 else term
    return total


def ehrhart_coefficient_stirling(k: int, n: int, m: int) -> Fraction:
    """Coefficient of t^m via the alternating Stirling-number formula."""
    _require_nondegenerate(k, n)
    if not 0 <= m <= n - 1:
        raise ValueError(f"coefficient index must satisfy 0 <= m <= n-1, got {m}")
    total = 0
    for j in range(k):
        term = binomial(n, j) * (k - j) ** m * f_coefficient(j, n, m)
        total += -term if j & 1 else term
    return Fraction(total, factorial(n - 1))


def ehrhart_coefficient_wlah(k: int, n: int, m: int,
                             wlah_method: str = "rec_b") -> Fraction:
    """Coefficient of t^m as a positive combination of weighted Lah numbers.

    (1/(n-1)!) * sum_l W(l, n, m+1) * A(m, k-l-1); every summand is
    nonnegative and at least one is positive, so the result is > 0.
    """
    _require_nondegenerate(k, n)
    if not 0 <= m <= n - 1:
        raise ValueError(f"coefficient index must satisfy 0 <= m <= n-1, got {m}")
    total = 0
    for l in range(k):
        total += wlah(l, n, m + 1, method=wlah_method) * eulerian(m, k - l - 1)
    return Fraction(total, factorial(n - 1))


def cnm_polynomial(n: int, m: int) -> Polynomial:
    """The polynomial whose l-th coefficient is W(l, n, m+1).

    Formed as the alternating generating polynomial of f_coefficient
    multiplied by the geometric expansion of 1/(1-x)^(m+1).  The product
    must stabilize: all coefficients in degrees n-m through 2n are
    checked to vanish, and a violation raises rather than truncating.
    """
    if not 0 <= m <= n - 1:
        raise ValueError(f"cnm_polynomial requires 0 <= m <= n-1, got ({n}, {m})")
    order = 2 * n
    f_poly = Polynomial(
        [(-1) ** j * binomial(n, j) * f_coefficient(j, n, m) for j in range(n + 1)]
    )
    geom = Polynomial([binomial(m + i, m) for i in range(order + 1)])
    prod = (f_poly * geom).truncate(order)
    for d in range(n - m, order + 1):
        if prod.coeff(d) != 0:
            raise RuntimeError(
                f"series for (n={n}, m={m}) failed to stabilize at degree {d}: "
                f"coefficient {prod.coeff(d)}"
            )
    return prod.truncate(n - m - 1)


def ehrhart_polynomial(k: int, n: int, method: str = "wlah") -> EhrhartResult:
    """Ehrhart polynomial of the (k, n) hypersimplex by the chosen route.

    The degenerate slices k = 0 and k = n are single points, so every
    dilation contains exactly one lattice point and the polynomial is
    the constant 1 regardless of method.
    """
    params = HypersimplexParams(n, k)  # validates 0 <= k <= n, n >= 1
    if k == 0 or k == n:
        return EhrhartResult(params, Polynomial([1]), method)
    if method == "katzman":
        return ehrhart_katzman(k, n)
    if method == "oracle":
        return ehrhart_interpolated(k, n)
    if method == "stirling":
        coeffs = [ehrhart_coefficient_stirling(k, n, m) for m in range(n)]
    elif method == "wlah":
        coeffs = [ehrhart_coefficient_wlah(k, n, m) for m in range(n)]
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {EHRHART_METHODS}")
    return EhrhartResult(params, Polynomial(coeffs), method)
