"""Noncommutative words, q-integers and bracket helpers."""

from hypothesis import given
from hypothesis import strategies as st

from qtor.algebra import (Expression, bracket, divided_power, gen, kk, kinv,
                          qbinom, qfact, qint, twisted_commutator, xm, xp)
from qtor.scalars import Scalar


def E(*syms):
    out = Expression.one()
    for s in syms:
        out = out * Expression.from_symbol(s)
    return out


def test_symbol_constructors():
    assert xp(1, 0) == gen("x+", 1, 0)
    assert xm(2, -1) == gen("x-", 2, -1)
    assert kk(0).kind == "k"
    assert kinv(0).kind == "kinv"


def test_expression_ring_basics():
    a = E(xp(1, 0))
    b = E(xm(1, 0))
    assert a * b != b * a            # words do not commute
    assert (a + b) - b == a
    assert (a * Scalar(0)).is_zero()
    assert Expression.one() * a == a


def test_bracket_definition():
    a = E(xp(1, 0))
    b = E(xm(2, 0))
    assert bracket(a, b) == a * b - b * a


def test_twisted_commutator_weight():
    a = E(xp(1, 0))
    b = E(xp(2, 0))
    u = Scalar.v_power(1)
    assert twisted_commutator([a, b], [u]) == a * b - b * a * u


def test_divided_power_small_cases():
    x = xp(1, 0)
    assert divided_power(x, 0, 1) == Expression.one()
    assert divided_power(x, 1, 1) == E(x)
    assert divided_power(x, 2, 1) == E(x, x) * qint(2, 1).inverse()


EXPONENTS = (1, 2, 3, 4, 6)   # covers d_i in {1/2, 1, 2, 3, 1/3} after scaling


def test_qint_symmetric_laurent():
    for e in EXPONENTS:
        for n in range(1, 13):
            s = qint(n, e)
            assert s.substitute_v_power(-1) == s


def test_qbinom_pascal_recurrence():
    for e in EXPONENTS:
        for n in range(1, 13):
            for k in range(1, n):
                lhs = qbinom(n, k, e)
                rhs = (Scalar.v_power(k * e) * qbinom(n - 1, k, e)
                       + Scalar.v_power(-(n - k) * e)
                       * qbinom(n - 1, k - 1, e))
                assert lhs == rhs


def test_qbinom_symmetry_and_bar_invariance():
    for e in EXPONENTS:
        for n in range(13):
            for k in range(n + 1):
                b = qbinom(n, k, e)
                assert b == qbinom(n, n - k, e)
                assert b.substitute_v_power(-1) == b


def test_qfact_product_of_qints():
    for e in (1, 2):
        total = Scalar(1)
        for n in range(1, 7):
            total = total * qint(n, e)
            assert qfact(n, e) == total


@given(st.integers(min_value=0, max_value=8),
       st.integers(min_value=0, max_value=8))
def test_qbinom_specializes_to_binomial(n, k):
    from fractions import Fraction
    from math import comb
    if k > n:
        return
    assert qbinom(n, k, 1).evaluate(Fraction(1)) == comb(n, k)


@given(st.permutations([xp(1, 0), xm(1, 0), kk(2), xp(2, -1)]))
def test_sum_of_words_is_order_independent(words):
    total = Expression.zero()
    for w in words:
        total = total + E(w)
    base = E(xp(1, 0)) + E(xm(1, 0)) + E(kk(2)) + E(xp(2, -1))
    assert total == base
