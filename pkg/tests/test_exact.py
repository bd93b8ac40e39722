from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twobridge.exact import (
    exact_div,
    format_rational,
    parse_rational,
    pow2,
    rat,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
)


def test_rat_normalizes():
    assert rat(6, 36) == Fraction(1, 6)
    q = rat(3, -4)
    assert (q.numerator, q.denominator) == (-3, 4)
    z = rat(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_rat_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)
    with pytest.raises(TypeError):
        rat(0.5, 1)


def test_arithmetic_examples():
    assert rat_add(rat(3, 4), rat(1, 12)) == rat(5, 6)
    assert rat_add(rat(5, 6), rat(1, 6)) == rat(1, 1)
    assert rat_mul(rat(1, 2), rat(1, 3)) == rat(1, 6)
    assert rat_sub(rat(1, 2), rat(1, 3)) == rat(1, 6)
    assert rat_div(rat(1, 2), rat(3, 1)) == rat(1, 6)
    with pytest.raises(ZeroDivisionError):
        rat_div(rat(1, 2), rat(0, 1))


def test_pow2():
    assert pow2(0) == 1
    assert pow2(10) == 1024
    assert pow2(61) == 2305843009213693952
    assert pow2(200) == 2**200
    with pytest.raises(ValueError):
        pow2(-1)


def test_exact_div_refuses_remainder():
    assert exact_div(18, 9) == 2
    with pytest.raises(ArithmeticError):
        exact_div(19, 9)


def test_serialization_keeps_denominator():
    assert format_rational(rat(1, 1)) == "1/1"
    assert format_rational(rat(-1, 12)) == "-1/12"
    assert parse_rational("3/2") == rat(3, 2)
    assert parse_rational("5") == rat(5)


small = st.integers(min_value=-50, max_value=50)
nonzero = small.filter(bool)
rationals = st.builds(rat, small, nonzero)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c))
    assert rat_add(a, -a) == 0
    if a != 0:
        assert rat_mul(a, rat_div(rat(1), a)) == 1


@given(small, nonzero, nonzero)
def test_reduction_idempotent(p, q, k):
    assert rat(k * p, k * q) == rat(p, q)
    r = rat(p, q)
    assert r.denominator > 0


@given(rationals)
def test_format_roundtrip(q):
    assert parse_rational(format_rational(q)) == q
