"""Matrix representations used to corroborate symbolic identities."""

from fractions import Fraction

import pytest

from qtor.algebra import Expression, bracket, kk, kinv, xm, xp
from qtor.cartan import cartan_data, parse_type
from qtor.morphisms import lusztig_T, toroidal_T
from qtor.oracle import (AGREE, default_battery, evaluation_rep, finite_rep,
                         horizontal_witness, matrix_check_equal, rep_after)
from qtor.scalars import Scalar


def E(*syms):
    out = Expression.one()
    for s in syms:
        out = out * Expression.from_symbol(s)
    return out


def test_finite_rep_constructs_and_validates():
    for q in (Fraction(2), Fraction(1, 3), Fraction(5, 2)):
        finite_rep("A1", 3, q)
        finite_rep("A2", None, q)


def test_evaluation_rep_battery():
    battery = default_battery("A2~1")
    assert len(battery) >= 6   # >= 3 q values x >= 2 parameters
    battery2 = default_battery("A1~1")
    assert len(battery2) >= 6


def test_matrix_check_equal_agrees_on_identity():
    reps = default_battery("A2")
    lhs = bracket(E(xp(1, 0)), E(xm(1, 0)))
    rhs = ((E(kk(1)) - E(kinv(1)))
           * (Scalar.v_power(1) - Scalar.v_power(-1)).inverse())
    verdict, _ = matrix_check_equal(lhs, rhs, reps)
    assert verdict == AGREE


def test_matrix_check_equal_flags_disagreement():
    reps = default_battery("A2")
    verdict, _ = matrix_check_equal(E(xp(1, 0)), E(xm(1, 0)), reps)
    assert verdict != AGREE


def test_rep_after_accepts_braid_operator():
    data = cartan_data(parse_type("A2~1"))
    t1 = lusztig_T(data, 1)
    for rep in default_battery("A2"):
        rep_after(t1, rep)   # raises if images break any relation


def test_rep_after_rejects_a_broken_map():
    data = cartan_data(parse_type("A2~1"))
    bad = toroidal_T(data, 1, mutate_sign=True)
    with pytest.raises(ValueError):
        for rep in default_battery("A2~1"):
            rep_after(bad, rep)


def test_horizontal_witness_oracle_interface():
    reps = default_battery("A2~1")
    witness = horizontal_witness(reps)
    zero = Expression.zero()
    assert witness(zero) in (AGREE, True) or witness(zero) is not None
