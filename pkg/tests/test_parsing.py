"""Text round-trips for expressions."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtor.algebra import Expression, gen, kk, xm, xp
from qtor.cartan import cartan_data, parse_type
from qtor.parsing import ParseError, parse_expression, print_expression
from qtor.scalars import Scalar


def E(*syms):
    out = Expression.one()
    for s in syms:
        out = out * Expression.from_symbol(s)
    return out


def test_parse_simple_words():
    e = parse_expression("x+(1,0)*k(1)")
    assert e == E(xp(1, 0), kk(1))


def test_parse_scalars_and_signs():
    e = parse_expression("-2*x-(2,1) + x+(1,0)")
    assert e == E(xm(2, 1)) * Scalar(-2) + E(xp(1, 0))


def test_parse_powers_and_central_element():
    e = parse_expression("k(1)^-1*C^2")
    img = list(e.terms)[0]
    assert [s.kind for s in img] == ["kinv", "C", "C"]


def test_round_trip_through_printer():
    for text in ("1*x+(1,0)", "-1*x-(1,0)*k(1)", "1*k(1)^-1",
                 "v^2*x+(0,-1) + -1*C"):
        e = parse_expression(text)
        assert parse_expression(print_expression(e)) == e


def test_parse_rejects_garbage():
    for bad in ("x+(", "k(1", "frog", "x+(1,0)**", "1 +"):
        with pytest.raises(ParseError):
            parse_expression(bad)


symbols = st.sampled_from([xp(0, 0), xp(1, -1), xm(2, 1), kk(1),
                           gen("kinv", 0), gen("C")])


@given(st.lists(symbols, min_size=1, max_size=4),
       st.integers(min_value=-5, max_value=5).filter(lambda c: c != 0))
def test_print_parse_is_identity(word, coeff):
    e = E(*word) * Scalar(coeff)
    assert parse_expression(print_expression(e)) == e
