"""Affine root data: Cartan matrices, marks, length functions, diagrams."""

from fractions import Fraction

import pytest

from qtor.cartan import (ALL_TYPE_TAGS, cartan_data, delta, highest_root,
                         is_a2n_even_cycle, length_function,
                         outer_automorphism, outer_automorphism_group,
                         pairing, parse_type)


@pytest.mark.parametrize("tag", ALL_TYPE_TAGS)
def test_symmetrized_matrix_is_symmetric(tag):
    data = cartan_data(parse_type(tag))
    n1 = data.n + 1
    for i in range(n1):
        for j in range(n1):
            assert data.d[i] * data.matrix[i][j] == data.d[j] * data.matrix[j][i]


@pytest.mark.parametrize("tag", ALL_TYPE_TAGS)
def test_marks_span_the_kernel(tag):
    data = cartan_data(parse_type(tag))
    n1 = data.n + 1
    for i in range(n1):
        assert sum(data.matrix[i][j] * data.a[j] for j in range(n1)) == 0
        assert sum(data.a_dual[j] * data.matrix[j][i] for j in range(n1)) == 0


@pytest.mark.parametrize("tag", ALL_TYPE_TAGS)
def test_node0_marks_are_normalized(tag):
    data = cartan_data(parse_type(tag))
    assert data.a[0] in (1, 2)
    assert data.a_dual[0] == 1 or data.a[0] == 1


def test_parse_type_rejects_junk():
    for bad in ("Z4~1", "A0~1", "A2", "A2~9", ""):
        with pytest.raises(ValueError):
            parse_type(bad)


def test_a2n_even_cycle_detection():
    assert is_a2n_even_cycle(cartan_data(parse_type("A2~1")))
    assert is_a2n_even_cycle(cartan_data(parse_type("A4~1")))
    assert not is_a2n_even_cycle(cartan_data(parse_type("A3~1")))
    assert not is_a2n_even_cycle(cartan_data(parse_type("C2~1")))


@pytest.mark.parametrize("tag", ["A3~1", "C2~1", "D4~1", "G2~1"])
def test_length_function_alternates_across_edges(tag):
    data = cartan_data(parse_type(tag))
    o, o_ratio = length_function(data)
    n1 = data.n + 1
    for i in range(n1):
        for j in range(n1):
            if i != j and data.matrix[i][j] != 0:
                assert o[i] * o[j] == -1


def test_length_ratio_on_odd_cycle_is_asymmetric():
    data = cartan_data(parse_type("A2~1"))
    _, o_ratio = length_function(data)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert o_ratio(i, j) * o_ratio(j, i) == -1


def test_outer_automorphism_group_orders():
    assert len(outer_automorphism_group(cartan_data(parse_type("A2~1")))) == 3
    assert len(outer_automorphism_group(cartan_data(parse_type("A3~1")))) == 4
    assert len(outer_automorphism_group(cartan_data(parse_type("C2~1")))) == 2
    assert len(outer_automorphism_group(cartan_data(parse_type("E8~1")))) == 1


def test_outer_automorphism_preserves_matrix():
    for tag in ("A2~1", "A3~1", "D4~1"):
        data = cartan_data(parse_type(tag))
        n1 = data.n + 1
        for p in data.i_min:
            if p == 0:
                continue
            perm = outer_automorphism(data, p)
            for i in range(n1):
                for j in range(n1):
                    assert data.matrix[perm(i)][perm(j)] == data.matrix[i][j]


def test_pairing_and_delta():
    data = cartan_data(parse_type("C2~1"))
    dl = delta(data)
    theta = highest_root(data)
    # delta pairs to zero against every coroot direction
    from qtor.cartan import coroot_basis
    for i in range(data.n + 1):
        assert pairing(dl, coroot_basis(data, i)) == 0
    assert theta is not None
