"""Truncated bivariate power series with exact rational coefficients.

A series is stored on a fixed rectangular truncation window: all
coefficients of x^i s^j with 0 <= i <= x_trunc, 0 <= j <= s_trunc.
Operations never grow the window, and reading outside it is an error
rather than a silent zero.  Internally the window is an integer matrix
over one shared positive denominator, so products stay in fast integer
arithmetic and are reduced only on coefficient access.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["BivariateSeries", "series_log_term"]


class BivariateSeries:
    __slots__ = ("x_trunc", "s_trunc", "_num", "_den")

    def __init__(self, x_trunc: int, s_trunc: int, coeffs=None):
        if x_trunc < 0 or s_trunc < 0:
            raise ValueError("truncation bounds must be nonnegative")
        self.x_trunc = x_trunc
        self.s_trunc = s_trunc
        if coeffs is None:
            self._num = [[0] * (s_trunc + 1) for _ in range(x_trunc + 1)]
            self._den = 1
            return
        rows = [[Fraction(c) for c in row] for row in coeffs]
        if len(rows) != x_trunc + 1 or any(len(r) != s_trunc + 1 for r in rows):
            raise ValueError("coefficient array must be (x_trunc+1) x (s_trunc+1)")
        den = 1
        for row in rows:
            for c in row:
                den = den * c.denominator // math.gcd(den, c.denominator)
        self._num = [[int(c * den) for c in row] for row in rows]
        self._den = den

    @classmethod
    def _raw(cls, x_trunc, s_trunc, num, den):
        out = cls.__new__(cls)
        out.x_trunc = x_trunc
        out.s_trunc = s_trunc
        out._num = num
        out._den = den
        return out

    @classmethod
    def constant(cls, value, x_trunc: int, s_trunc: int) -> "BivariateSeries":
        out = cls(x_trunc, s_trunc)
        v = Fraction(value)
        out._num[0][0] = v.numerator
        out._den = v.denominator
        return out

    def coeff(self, i: int, j: int) -> Fraction:
        """Coefficient of x^i s^j; reading outside the window is an error."""
        if not (0 <= i <= self.x_trunc and 0 <= j <= self.s_trunc):
            raise ValueError(
                f"coefficient ({i},{j}) lies outside the stored truncation "
                f"({self.x_trunc},{self.s_trunc})"
            )
        return Fraction(self._num[i][j], self._den)

    def _check_window(self, other):
        if self.x_trunc != other.x_trunc or self.s_trunc != other.s_trunc:
            raise ValueError("series truncation windows differ")

    def __eq__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        if self.x_trunc != other.x_trunc or self.s_trunc != other.s_trunc:
            return False
        for ra, rb in zip(self._num, other._num):
            for a, b in zip(ra, rb):
                if a * other._den != b * self._den:
                    return False
        return True

    def __add__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        self._check_window(other)
        g = math.gcd(self._den, other._den)
        den = self._den // g * other._den
        ma = den // self._den
        mb = den // other._den
        num = [
            [a * ma + b * mb for a, b in zip(ra, rb)]
            for ra, rb in zip(self._num, other._num)
        ]
        return BivariateSeries._raw(self.x_trunc, self.s_trunc, num, den)

    def __sub__(self, other):
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, BivariateSeries):
            self._check_window(other)
            X, S = self.x_trunc, self.s_trunc
            num = [[0] * (S + 1) for _ in range(X + 1)]
            for i, row in enumerate(self._num):
                for j in range(S + 1):
                    a = row[j]
                    if not a:
                        continue
                    for p in range(X + 1 - i):
                        orow = other._num[p]
                        for q in range(S + 1 - j):
                            b = orow[q]
                            if b:
                                num[i + p][j + q] += a * b
            return BivariateSeries._raw(X, S, num, self._den * other._den)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            num = [[c * f.numerator for c in row] for row in self._num]
            return BivariateSeries._raw(
                self.x_trunc, self.s_trunc, num, self._den * f.denominator
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "BivariateSeries":
        """Truncated m-th power; the 0-th power is the constant series 1."""
        if m < 0:
            raise ValueError("series power requires a nonnegative exponent")
        result = BivariateSeries.constant(1, self.x_trunc, self.s_trunc)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __repr__(self):
        return f"BivariateSeries(x_trunc={self.x_trunc}, s_trunc={self.s_trunc})"


def series_log_term(x_trunc: int, s_trunc: int) -> BivariateSeries:
    """The truncated series sum_{k>=1} (x^k / k) * (1 + s + ... + s^(k-1)).

    Its m-th power carries the weight generating function of ordered
    partitions into m blocks; see `hyperlah.weighted_lah`.
    """
    if x_trunc < 0 or s_trunc < 0:
        raise ValueError("truncation bounds must be nonnegative")
    den = math.lcm(*range(1, x_trunc + 1)) if x_trunc >= 1 else 1
    num = [[0] * (s_trunc + 1) for _ in range(x_trunc + 1)]
    for k in range(1, x_trunc + 1):
        v = den // k
        for j in range(0, min(k - 1, s_trunc) + 1):
            num[k][j] = v
    return BivariateSeries._raw(x_trunc, s_trunc, num, den)
