import random

import pytest
from hypothesis import given, strategies as st

from tangleball.errors import ConwaySyntaxError, NotRationalError
from tangleball.rationals import INFINITY, ExtRational
from tangleball.tangles import (
    INF,
    ZERO,
    FormalSum,
    HorizontalTwist,
    Mirror,
    TwistVector,
    VerticalTwist,
    canonical_twists,
    fraction,
    is_isotopic,
    parse_conway,
    render,
    sum_leaves,
    twists_to_expr,
)


def cf_oracle(entries):
    """Independent oracle for a_n + 1/(a_{n-1} + ... + 1/a_1): evaluate
    innermost-first as x = a_1, then x = a_i + 1/x."""
    x = ExtRational.of(entries[0])
    for a in entries[1:]:
        x = x.reciprocal().add_int(a)
    return x


def test_parse_trivial_cases():
    assert parse_conway("0") is ZERO or parse_conway("0") == ZERO
    assert parse_conway("inf") == INF
    assert parse_conway("[3]") == HorizontalTwist(ZERO, 3)


def test_parse_sum_expands_to_two_rational_subtrees():
    t = parse_conway("sum([2,1],[2,1])")
    assert isinstance(t, FormalSum)
    leaves = sum_leaves(t)
    assert len(leaves) == 2
    assert fraction(leaves[0]) == fraction(leaves[1]) == ExtRational(3, 2)


def test_parse_errors_report_positions():
    with pytest.raises(ConwaySyntaxError) as e:
        parse_conway("[2,,3]")
    assert e.value.position == 3
    with pytest.raises(ConwaySyntaxError):
        parse_conway("mirror(")
    with pytest.raises(ConwaySyntaxError):
        parse_conway("[2] junk")
    with pytest.raises(ConwaySyntaxError):
        parse_conway("7")


def test_fraction_hand_values():
    # 4 + 1/(3 + 1/2) = 30/7
    assert fraction(parse_conway("[2,3,4]")) == ExtRational(30, 7)
    assert fraction(parse_conway("inf")) == INFINITY
    assert fraction(parse_conway("mirror([2,3,4])")) == ExtRational(-30, 7)
    assert fraction(parse_conway("0")) == ExtRational(0, 1)
    # 2 + 1/2 = 5/2 for the even-length vector
    assert fraction(parse_conway("[2,2]")) == ExtRational(5, 2)
    assert fraction(parse_conway("rot([2,3,4])")) == ExtRational(-7, 30)
    assert fraction(parse_conway("inv([2,3,4])")) == ExtRational(7, 30)
    assert fraction(parse_conway("vtwist(inf,3)")) == ExtRational(1, 3)
    assert fraction(parse_conway("htwist([2,3,4],-4)")) == ExtRational(2, 7)


def test_fraction_rejects_sums():
    with pytest.raises(NotRationalError):
        fraction(parse_conway("sum([2,1],[2,1])"))


def test_extended_points_swap_under_rotation():
    assert fraction(parse_conway("rot(0)")) == INFINITY
    assert fraction(parse_conway("rot(inf)")) == ExtRational(0, 1)


def test_is_isotopic_examples():
    assert is_isotopic(parse_conway("[2,2]"), parse_conway("[1,1,2]"))
    assert not is_isotopic(parse_conway("[3]"), parse_conway("[4]"))
    assert not is_isotopic(parse_conway("[2,3,4]"), parse_conway("mirror([2,3,4])"))


def test_canonical_twists_examples():
    assert canonical_twists(ExtRational.of(0)) == TwistVector((0,))
    assert canonical_twists(ExtRational.of(30, 7)) == TwistVector((2, 3, 4))
    assert canonical_twists(ExtRational.of(5, 2)) == TwistVector((2, 2))
    assert canonical_twists(INFINITY).infinite
    assert str(canonical_twists(INFINITY)) == "inf"
    assert canonical_twists(ExtRational.of(-30, 7)) == TwistVector((-2, -3, -4))
    assert canonical_twists(ExtRational.of(1, 2)) == TwistVector((2, 0))


def test_canonical_twists_same_sign_last_entry_zero_rule():
    for p, q in [(1, 3), (2, 5), (3, 7), (7, 3), (25, 1)]:
        for sign in (1, -1):
            tv = canonical_twists(ExtRational.of(sign * p, q))
            entries = tv.entries
            assert all(a * sign >= 0 for a in entries)
            assert all(a != 0 for a in entries[:-1])


def test_twist_vector_evaluation_matches_cf_oracle():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 7)
        entries = [rng.randint(1, 6) for _ in range(n)]
        assert fraction(twists_to_expr(TwistVector(tuple(entries)))) == cf_oracle(
            entries
        )


def test_roundtrip_small_exhaustive():
    for p in range(-30, 31):
        for q in range(1, 31):
            from math import gcd

            if gcd(abs(p), q) != 1:
                continue
            f = ExtRational.of(p, q)
            assert fraction(twists_to_expr(canonical_twists(f))) == f


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_roundtrip_property(p, q):
    from math import gcd

    if gcd(abs(p), q) != 1:
        return
    f = ExtRational.of(p, q)
    assert fraction(twists_to_expr(canonical_twists(f))) == f


@given(st.integers(-10**4, 10**4), st.integers(1, 10**4))
def test_fraction_laws(p, q):
    from math import gcd

    if gcd(abs(p), q) != 1:
        return
    f = ExtRational.of(p, q)
    t = twists_to_expr(canonical_twists(f))
    assert fraction(Mirror(t)) == -f
    assert fraction(Mirror(Mirror(t))) == f
    if not f.is_zero:
        from tangleball.tangles import Invert, Rotate

        assert fraction(Rotate(Rotate(t))) == f
        assert fraction(Invert(t)) == fraction(Rotate(Mirror(t)))


def test_render_roundtrip_on_canonical_text():
    texts = [
        "0",
        "inf",
        "[3]",
        "[2,3,4]",
        "[-2,-3,-4]",
        "[2,0]",
        "mirror([2,3,4])",
        "rot(inv([1,1,2]))",
        "htwist(rot([3]),2)",
        "sum([2,1],[2,2,0])",
        "vtwist(inf,5)",
    ]
    for text in texts:
        t = parse_conway(text)
        assert render(t) == text
        assert parse_conway(render(t)) == t


def test_render_uses_bracket_form_for_expansion_shapes():
    f = ExtRational.of(30, 7)
    assert render(twists_to_expr(canonical_twists(f))) == "[2,3,4]"
    f = ExtRational.of(1, 2)
    assert render(twists_to_expr(canonical_twists(f))) == "[2,0]"
