"""Relation suites: Drinfeld-Jimbo, loop-style, and the finite presentation."""

import json

import pytest

from qtor.algebra import Expression
from qtor.cartan import cartan_data, parse_type
from qtor.presentations import (affinization_relations, ax_presentation,
                                context_from_cartan, dj_relations,
                                finite_generators, finite_rank2_context,
                                toroidal_finite_presentation)


def ctx_of(tag):
    return context_from_cartan(cartan_data(parse_type(tag)))


def test_dj_relations_nonempty_and_families():
    suite = dj_relations(ctx_of("A2~1"))
    families = {r.family for r in suite.relations}
    assert {"unit", "tt", "tx", "xx", "serre"} <= families
    assert all(isinstance(r.lhs, Expression) for r in suite.relations)


def test_affinization_relations_scale_with_bounds():
    ctx = ctx_of("A2~1")
    small = affinization_relations(ctx, 1, 1)
    large = affinization_relations(ctx, 2, 2)
    assert 0 < len(small.relations) < len(large.relations)


def test_finite_presentation_covers_twenty_generators():
    data = cartan_data(parse_type("A2~1"))
    ctx = context_from_cartan(data)
    gens = finite_generators(ctx)
    assert len(gens) == 20
    suite = toroidal_finite_presentation(data)
    used = set()
    for r in suite.relations:
        for e in (r.lhs, r.rhs):
            for word in e.terms:
                used.update(word)
    assert set(gens) <= used


def test_finite_presentation_guard():
    with pytest.raises(ValueError, match="a_ij\\*a_ji <= 3"):
        toroidal_finite_presentation(cartan_data(parse_type("A1~1")))


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_ax_presentation_rank2(name):
    suite = ax_presentation(name)
    assert suite.relations
    nodes = set()
    for r in suite.relations:
        for e in (r.lhs, r.rhs):
            for word in e.terms:
                nodes.update(s.node for s in word if s.node is not None)
    assert nodes <= {1, 2}


def test_suite_to_json_is_stable():
    suite = dj_relations(ctx_of("C2~1"))
    a = suite.to_json()
    b = suite.to_json()
    assert a == b
    parsed = json.loads(a)
    assert parsed["suite"] == "dj-C2~1"


def test_relations_have_unique_ids():
    suite = toroidal_finite_presentation(cartan_data(parse_type("A2~1")))
    ids = [r.id for r in suite.relations]
    assert len(ids) == len(set(ids))
