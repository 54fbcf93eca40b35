from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from solidcount import (
    LatticeVector,
    floor_frac,
    gcd,
    mod_inverse,
    parse_rational,
    primitive,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=60
)


def test_gcd_examples():
    assert gcd(0, 0) == 0
    assert gcd(6, 4) == 2
    assert gcd(3 * 5, 3) == 3


def test_mod_inverse_examples():
    assert mod_inverse(2, 3) == 2
    assert mod_inverse(3, 2) == 1
    assert mod_inverse(1, 1) == 0


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(ValueError):
        mod_inverse(4, 6)
    with pytest.raises(ValueError):
        mod_inverse(5, 0)


@given(st.integers(2, 500), st.integers(-500, 500))
def test_mod_inverse_involution(m, a):
    if gcd(a, m) != 1:
        return
    r = mod_inverse(a, m)
    assert 0 <= r < m and (a * r) % m == 1
    assert mod_inverse(r, m) == a % m


def test_floor_frac_examples():
    assert floor_frac(Fraction(7, 2)) == (3, Fraction(1, 2))
    assert floor_frac(Fraction(-1, 3)) == (-1, Fraction(2, 3))
    assert floor_frac(4) == (4, 0)


@given(rationals, st.integers(-50, 50))
def test_floor_frac_shift(q, n):
    f, r = floor_frac(q)
    assert q == f + r and 0 <= r < 1
    assert floor_frac(q + n) == (f + n, r)


def test_primitive_examples():
    assert primitive((4, 6)) == (LatticeVector(2, 3), 2)
    assert primitive((0, -5)) == (LatticeVector(0, -1), 5)
    assert primitive((3, 2)) == (LatticeVector(3, 2), 1)


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive((0, 0))


@given(st.integers(-200, 200), st.integers(-200, 200))
def test_primitive_reconstruction(x, y):
    if x == 0 and y == 0:
        return
    p, m = primitive((x, y))
    assert m >= 1 and gcd(p.x, p.y) == 1
    assert (m * p.x, m * p.y) == (x, y)


@pytest.mark.parametrize(
    "text,value",
    [("3/4", Fraction(3, 4)), ("-7/2", Fraction(-7, 2)), ("5", Fraction(5)), ("-12", -12)],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1.5", "a", "1/2/3", "", "+3", "2 /3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)
