"""Exact Eisenstein arithmetic and the figure-eight matrix group."""

import random

import pytest

from iccdec.eisenstein import (
    E_OMEGA,
    E_ONE,
    EisensteinInt,
    MatrixGroupSL2Eisenstein,
    figure8_group,
    mat_det,
    mat_trace,
)
from iccdec.groups import GroupUsageError, ball_with_lengths, enumerate_ball


def test_ring_law_examples():
    one_plus_w = EisensteinInt(1, 1)
    assert one_plus_w * one_plus_w == E_OMEGA
    assert EisensteinInt(2, 1).norm() == 3
    assert EisensteinInt(1, 0) + EisensteinInt(0, 1) == one_plus_w
    assert -EisensteinInt(3, -2) == EisensteinInt(-3, 2)
    assert E_OMEGA * E_OMEGA == EisensteinInt(-1, -1)  # w^2 = -1 - w


def test_norm_multiplicative_random():
    rng = random.Random(41)
    for _ in range(300):
        x = EisensteinInt(rng.randint(-9, 9), rng.randint(-9, 9))
        y = EisensteinInt(rng.randint(-9, 9), rng.randint(-9, 9))
        assert (x * y).norm() == x.norm() * y.norm()
        assert x.norm() >= 0


def test_arbitrary_precision():
    big = EisensteinInt(10**40, 3)
    square = big * big
    assert square.a == 10**80 - 9
    assert square.b == 6 * 10**40 - 9


def test_generator_determinant_enforced():
    with pytest.raises(GroupUsageError):
        MatrixGroupSL2Eisenstein([(((2, 0), (0, 0)), ((0, 0), (1, 0)))])


def test_figure8_generators():
    group = figure8_group()
    assert group.gen_names == ("A", "B")
    a = group.generator_element("A")
    b = group.generator_element("B")
    assert (a * ~a).is_identity()
    assert mat_trace((a * b).payload) == EisensteinInt(2, -1)  # 2 - w
    assert mat_det((a * b).payload) == E_ONE


def test_det_and_trace_invariants_on_ball():
    group = figure8_group()
    a = group.generator_element("A")
    elements, _ = ball_with_lengths(group, 4)
    trace_a = mat_trace(a.payload)
    for w in elements:
        assert mat_det(w.payload) == E_ONE
        assert mat_trace((w * a * ~w).payload) == trace_a


def test_class_growth_radii_two_to_six():
    from iccdec.oracle import conjugacy_class_ball

    group = figure8_group()
    a = group.generator_element("A")
    report = conjugacy_class_ball(group, a, 6)
    counts = report.counts_by_radius
    assert all(counts[r] < counts[r + 1] for r in range(2, 6))
    assert not report.stabilized
    assert counts[-1] >= 10


def test_ball_is_not_free_growth():
    # the group relations first identify words at radius 5: the ball equals
    # the rank-2 free group ball through radius 4 and is strictly smaller
    # afterwards
    group = figure8_group()
    elements, lengths = ball_with_lengths(group, 5)
    free_sizes = [1, 5, 17, 53, 161, 485]
    sizes = [sum(1 for L in lengths if L <= r) for r in range(6)]
    assert sizes[:5] == free_sizes[:5]
    assert sizes[5] < free_sizes[5]


def test_mat2e_value_type():
    from iccdec.eisenstein import Mat2E

    a = Mat2E([[(1, 0), (1, 0)], [(0, 0), (1, 0)]])
    b = Mat2E([[(1, 0), (0, 0)], [(0, -1), (1, 0)]])
    product = a * b
    assert product.det() == E_ONE
    assert product.trace() == EisensteinInt(2, -1)
    assert (a * a.inverse()) == Mat2E([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    with pytest.raises(GroupUsageError):
        Mat2E([[(2, 0), (0, 0)], [(0, 0), (1, 0)]])
    group = figure8_group()
    assert group.matrix_element(a) == group.generator_element("A")
