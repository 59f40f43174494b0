import pytest
from hypothesis import given, strategies as st

from tangleball.rationals import INFINITY, ZERO, ExtRational


def test_reduction_and_sign_normalization():
    assert ExtRational.of(30, 7) == ExtRational(30, 7)
    assert ExtRational.of(6, 4) == ExtRational(3, 2)
    assert ExtRational.of(3, -2) == ExtRational(-3, 2)
    assert ExtRational.of(-3, -2) == ExtRational(3, 2)
    assert ExtRational.of(0, 5) == ZERO


def test_infinity_is_sign_normalized():
    assert ExtRational.of(5, 0) == INFINITY
    assert ExtRational.of(-2, 0) == INFINITY
    assert -INFINITY == INFINITY
    with pytest.raises(ZeroDivisionError):
        ExtRational.of(0, 0)


def test_extended_arithmetic():
    assert INFINITY.add_int(7) == INFINITY
    assert INFINITY.reciprocal() == ZERO
    assert ZERO.reciprocal() == INFINITY
    assert ExtRational.of(2, 3).reciprocal() == ExtRational(3, 2)
    assert ExtRational.of(-2, 3).reciprocal() == ExtRational(-3, 2)
    assert ExtRational.of(5, 3).add_int(-2) == ExtRational(-1, 3)


def test_parse_and_str():
    assert ExtRational.parse("30/7") == ExtRational(30, 7)
    assert ExtRational.parse("-4") == ExtRational(-4, 1)
    assert ExtRational.parse("inf") == INFINITY
    assert str(ExtRational(30, 7)) == "30/7"
    assert str(INFINITY) == "1/0"


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_of_always_reduced(p, q):
    from math import gcd

    if p == 0 and q == 0:
        return
    f = ExtRational.of(p, q)
    if f.den == 0:
        assert f.num == 1
    else:
        assert f.den > 0
        assert gcd(abs(f.num), f.den) == 1


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_double_reciprocal_roundtrip(p, q):
    f = ExtRational.of(p, q)
    assert f.reciprocal().reciprocal() == f
