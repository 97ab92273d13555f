import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from latticebasis.arith import (altered_mod1, ext_gcd, frac_part, gcd_many, lcm_many,
                                round_nearest)


@pytest.mark.parametrize("a, b, g", [(9, 6, 3), (12, 18, 6), (0, 5, 5), (-4, 6, 2), (7, 0, 7),
                                     (-7, -21, 7)])
def test_ext_gcd_identity(a, b, g):
    got, alpha, beta = ext_gcd(a, b)
    assert got == g
    assert alpha * a + beta * b == g


def test_ext_gcd_example_pair():
    assert ext_gcd(9, 6) == (3, 1, -1)


def test_ext_gcd_zero():
    assert ext_gcd(0, 0) == (0, 0, 0)


def test_ext_gcd_random_256_bit():
    rng = random.Random(2024)
    for _ in range(10_000):
        a = rng.getrandbits(256) * rng.choice((-1, 1))
        b = rng.getrandbits(rng.randint(1, 256)) * rng.choice((-1, 1))
        g, alpha, beta = ext_gcd(a, b)
        assert alpha * a + beta * b == g
        assert g == gcd(a, b)
        if g:
            assert a % g == 0 and b % g == 0


def test_gcd_many():
    assert gcd_many((9, 6, 4)) == 1
    assert gcd_many((15,)) == 15
    assert gcd_many((0, 0)) == 0
    assert gcd_many((-12, 18)) == 6


def test_lcm_many():
    assert lcm_many((3, 9)) == 9
    assert lcm_many((1, 1, 1)) == 1
    assert lcm_many((4, 6)) == 12
    with pytest.raises(ValueError):
        lcm_many((3, 0))


def test_lcm_of_solution_denominators():
    # x = B^{-1} c for B = (6,3),(1,5) and c = (2,4), (4,4), second coordinate,
    # solved by Cramer's rule: det B = 27
    x2 = [Fraction(6 * 4 - 3 * 2, 27), Fraction(6 * 4 - 3 * 4, 27)]
    assert x2 == [Fraction(2, 3), Fraction(4, 9)]
    assert lcm_many(v.denominator for v in x2) == 9


@pytest.mark.parametrize("q, expected", [
    (Fraction(7, 3), Fraction(1, 3)),
    (Fraction(5), Fraction(1)),
    (Fraction(-1, 4), Fraction(3, 4)),
    (Fraction(0), Fraction(0)),
    (Fraction(-3), Fraction(1)),
    (Fraction(1), Fraction(1)),
])
def test_altered_mod1(q, expected):
    assert altered_mod1(q) == expected


@given(st.fractions())
def test_altered_mod1_range(q):
    r = altered_mod1(q)
    assert 0 <= r <= 1
    if q.denominator == 1 and q != 0:
        assert r == 1
    else:
        assert (q - r).denominator == 1
        assert r == frac_part(q)


@pytest.mark.parametrize("q, expected", [
    (Fraction(1, 2), 1), (Fraction(-1, 2), 0), (Fraction(3, 2), 2), (Fraction(2, 3), 1),
    (Fraction(-7, 3), -2), (Fraction(4), 4),
])
def test_round_nearest_rounds_halves_up(q, expected):
    assert round_nearest(q) == expected


@given(st.fractions())
def test_round_nearest_distance(q):
    assert -Fraction(1, 2) <= q - round_nearest(q) < Fraction(1, 2)


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    for v in (a + b, a * b, a - c):
        assert v.denominator > 0 and gcd(v.numerator, v.denominator) == 1


def test_big_values_round_trip():
    v = 10 ** 300 + 7
    assert ext_gcd(v * 3, v * 5)[0] == v
    assert altered_mod1(Fraction(v, 10 ** 300)) == Fraction(7, 10 ** 300)
