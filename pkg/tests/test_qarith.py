from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cominuscule.qarith import AlgebraError, LaurentPoly, RatFunc, q_binomial, q_factorial, q_integer

q = LaurentPoly.monomial(1)
qi = LaurentPoly.monomial(-1)


def lp(d):
    return LaurentPoly(d)


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
ratfuncs = st.tuples(laurent, nonzero_laurent).map(lambda t: RatFunc(t[0], t[1]))


def test_term_merge():
    assert (q + 1) + (qi - 1) == q + qi


def test_difference_of_squares():
    assert (q - qi) * (q + qi) == lp({2: 1, -2: -1})


def test_invert_q():
    assert (q * q + 3).invert_q() == lp({-2: 1, 0: 3})


def test_no_zero_coefficients_stored():
    p = (q + 1) - q
    assert p.terms == {0: 1}
    assert (q - q).terms == {}


def test_multiplicative_inverse():
    x = RatFunc(q - qi)
    assert RatFunc(1) / x * x == RatFunc(1)


def test_division_by_zero():
    with pytest.raises(AlgebraError):
        RatFunc(1) / RatFunc(0)


def test_q_integers():
    assert q_integer(2) == RatFunc(q + qi)
    assert q_factorial(3) == RatFunc((q + qi) * (q * q + 1 + qi * qi))
    assert q_binomial(4, 2) == RatFunc(lp({4: 1, 2: 1, 0: 2, -2: 1, -4: 1}))
    with pytest.raises(ValueError):
        q_integer(-1)
    with pytest.raises(ValueError):
        q_factorial(-2)


def test_q_integer_at_one():
    for n in range(8):
        for d in (1, 2, 3):
            assert q_integer(n, d).evaluate(1) == n


def test_q_binomial_is_laurent():
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k, 2).is_laurent()


@given(ratfuncs)
def test_additive_inverse(x):
    assert x + (-x) == RatFunc(0)


@given(ratfuncs, ratfuncs, ratfuncs)
@settings(max_examples=60)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if y:
        assert (x / y) * y == x


@given(ratfuncs)
def test_invert_q_involution(x):
    assert x.invert_q().invert_q() == x


@given(laurent, laurent)
def test_evaluation_is_a_homomorphism(a, b):
    assert (a * b).evaluate(Fraction(3, 2)) == a.evaluate(Fraction(3, 2)) * b.evaluate(Fraction(3, 2))
