"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

from .combinat import factorial

__all__ = ["Polynomial", "t_binomial", "interpolate", "rational_str"]


def rational_str(q) -> str:
    """Render an exact rational as 'p/q' in lowest terms, or 'p' if integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    """Immutable dense polynomial; coeffs[i] is the coefficient of t^i.

    Trailing zero coefficients are trimmed, so the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        """Coefficient of t^i (0 beyond the stored degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        """Exact value at t (Horner scheme)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def truncate(self, degree: int) -> "Polynomial":
        """Drop all terms of degree greater than `degree`."""
        return Polynomial(self.coeffs[: degree + 1])

    def as_text(self, var: str = "t") -> str:
        """Human-readable form, ascending degree: '1 + 7/3 t + 2 t^2'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = rational_str(mag)
            else:
                v = var if i == 1 else f"{var}^{i}"
                body = v if mag == 1 else f"{rational_str(mag)} {v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        return self.as_text()

    def __repr__(self):
        return f"Polynomial({[rational_str(c) for c in self.coeffs]})"


def t_binomial(c: int, shift: int, d: int) -> Polynomial:
    """The degree-d polynomial (1/d!) * prod_{r=0}^{d-1} (c*t + shift - r).

    At integer t this equals binomial(c*t + shift, d).
    """
    if d < 0:
        raise ValueError(f"t_binomial requires d >= 0, got {d}")
    prod = Polynomial([1])
    for r in range(d):
        prod = prod * Polynomial([shift - r, c])
    return prod * Fraction(1, factorial(d))


def interpolate(points) -> Polynomial:
    """Exact Lagrange interpolation through (x, y) pairs with distinct x."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Polynomial()
    for i, (xi, yi) in enumerate(pts):
        num = Polynomial([1])
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Polynomial([-xj, 1])
                den *= xi - xj
        total = total + num * (yi / den)
    return total
