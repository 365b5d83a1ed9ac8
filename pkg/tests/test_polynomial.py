"""Exact polynomial arithmetic, evaluation, and interpolation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperlah.combinat import binomial
from hyperlah.polynomial import Polynomial, interpolate, rational_str, t_binomial

small_polys = st.builds(
    Polynomial, st.lists(st.integers(min_value=-9, max_value=9), max_size=5)
)


def test_zero_polynomial_sentinel():
    z = Polynomial()
    assert z.degree == -1
    assert not z
    assert Polynomial([0, 0]) == z
    assert z(7) == 0


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (1, 2)


def test_ring_identities():
    p = Polynomial([1, Fraction(7, 3), 2])
    assert p + Polynomial() == p
    assert p - p == Polynomial()
    assert Polynomial([1, 1]) * Polynomial([-1, 1]) == Polynomial([-1, 0, 1])


def test_product_degree_adds():
    p = Polynomial([3, 0, 1])
    q = Polynomial([1, 2, 0, 5])
    assert (p * q).degree == p.degree + q.degree


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_evaluation():
    p = Polynomial([1, Fraction(7, 3), 2, Fraction(2, 3)])
    assert p(1) == 6  # lattice count of the dilated slice at t=1
    assert p(0) == 1
    assert Polynomial([5])(123) == 5


def test_t_binomial_trivial_cases():
    assert t_binomial(3, 9, 0) == Polynomial([1])
    # frozen independent expansion of prod_{r<3}(2t + 3 - r)/3!
    assert t_binomial(2, 3, 3).coeffs == (
        Fraction(1),
        Fraction(11, 3),
        Fraction(4),
        Fraction(4, 3),
    )


def test_t_binomial_matches_binomial_at_integers():
    for c in range(-4, 5):
        for shift in range(-10, 11):
            for d in range(0, 9):
                p = t_binomial(c, shift, d)
                for t in range(-10, 11):
                    assert p(t) == binomial(c * t + shift, d), (c, shift, d, t)


def test_t_binomial_degree():
    for d in range(6):
        assert t_binomial(1, 3, d).degree == d
    assert t_binomial(0, 3, 4).degree <= 0


def test_interpolation_recovers_polynomial():
    p = Polynomial([Fraction(1, 2), -3, 0, Fraction(5, 7)])
    points = [(t, p(t)) for t in range(4)]
    assert interpolate(points) == p


def test_interpolation_rejects_duplicate_nodes():
    with pytest.raises(ValueError):
        interpolate([(1, 2), (1, 3)])


def test_text_rendering():
    assert Polynomial([1, Fraction(7, 3), 2, Fraction(2, 3)]).as_text() == (
        "1 + 7/3 t + 2 t^2 + 2/3 t^3"
    )
    assert Polynomial([1, 1]).as_text() == "1 + t"
    assert Polynomial([0, -2, 1]).as_text() == "-2 t + t^2"
    assert Polynomial().as_text() == "0"
    assert Polynomial([Fraction(-1, 2)]).as_text() == "-1/2"


def test_rational_str():
    assert rational_str(Fraction(7, 3)) == "7/3"
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(5) == "5"
    assert rational_str(Fraction(-2, 6)) == "-1/3"
