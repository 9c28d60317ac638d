"""Conjugacy class balls, FC-center candidates, witness sequences."""

import pytest

from iccdec.groups import (
    DirectWithFinite,
    FiberExtension,
    FreeProduct,
    GroupUsageError,
    InfiniteCyclic,
    SemidirectZnByZ,
    TorsionPart,
    cyclic_table,
    enumerate_ball,
)
from iccdec.oracle import conjugacy_class_ball, fc_center_candidates, strong_icc_witness
from conftest import CyclicFreeProductOracle


# ---------------------------------------------------------------------------
# conjugacy_class_ball


def test_dihedral_class_of_ab(dihedral):
    ab = dihedral.reduce_letters([("a", 1), ("b", 1)])
    report = conjugacy_class_ball(dihedral, ab, 6)
    assert list(report.counts_by_radius) == [1, 2, 2, 2, 2, 2, 2]
    assert report.stabilized
    assert [repr(c) for c in report.conjugates] == ["ab", "ba"]


def test_trefoil_central_fiber_power():
    group = FiberExtension([TorsionPart("x", 2, -1), TorsionPart("y", 3, -1)])
    x_squared = group.reduce_letters([("x", 2)])
    report = conjugacy_class_ball(group, x_squared, 6)
    assert set(report.counts_by_radius) == {1}
    assert report.stabilized
    assert report.central_proven


def test_hyperbolic_lattice_vector_growth():
    group = SemidirectZnByZ(2, [[2, 1], [1, 1]])
    v = group.element(((1, 0), 0))
    report = conjugacy_class_ball(group, v, 10)
    # conjugates of (v, 0) are exactly the monodromy orbit elements
    # (phi^m v, 0), one new pair per radius: counts 1, 3, 5, ..., 21
    assert list(report.counts_by_radius) == list(range(1, 22, 2))
    assert not report.stabilized


def test_identity_class_is_trivial(dihedral):
    report = conjugacy_class_ball(dihedral, dihedral.identity(), 4)
    assert report.counts_by_radius[-1] == 1
    assert report.stabilized


def test_radius_window_validation(dihedral):
    ab = dihedral.reduce_letters([("a", 1), ("b", 1)])
    with pytest.raises(GroupUsageError):
        conjugacy_class_ball(dihedral, ab, 2, window=3)
    with pytest.raises(GroupUsageError):
        conjugacy_class_ball(dihedral, ab, 4, window=0)


def test_counts_monotone_and_nested(z2_star_z3):
    ab = z2_star_z3.reduce_letters([("a", 1), ("b", 1)])
    small = conjugacy_class_ball(z2_star_z3, ab, 6)
    large = conjugacy_class_ball(z2_star_z3, ab, 8)
    counts = list(large.counts_by_radius)
    assert counts == sorted(counts)
    assert {c.payload for c in small.conjugates} <= {c.payload for c in large.conjugates}
    # lower-bound semantics: conjugates are pairwise distinct canonical forms
    assert len({c.payload for c in large.conjugates}) == large.counts_by_radius[-1]


def test_class_counts_match_independent_oracle(z2_star_z3):
    oracle = CyclicFreeProductOracle(2, 3)
    expected = oracle.conjugacy_counts(((0, 1), (1, 1)), 10)
    ab = z2_star_z3.reduce_letters([("a", 1), ("b", 1)])
    report = conjugacy_class_ball(z2_star_z3, ab, 10)
    assert list(report.counts_by_radius) == expected


# ---------------------------------------------------------------------------
# fc_center_candidates


def test_fc_free_group_empty(f2):
    assert fc_center_candidates(f2, 6, 3) == []


def test_fc_dihedral_translations(dihedral):
    candidates = fc_center_candidates(dihedral, 8, 3)
    assert {repr(c) for c in candidates} == {"ab", "ba", "abab", "baba"}


def test_fc_direct_product_central_involution(f2):
    group = DirectWithFinite(f2, cyclic_table(2, names=["1", "z"]))
    candidates = fc_center_candidates(group, 6, 3)
    assert len(candidates) == 1
    assert candidates[0] == group.finite_element(1)


def test_fc_abelian_whole_punctured_ball():
    z2 = SemidirectZnByZ(1, [[1]])  # Z^2
    candidates = fc_center_candidates(z2, 4, 3)
    punctured = [g for g in enumerate_ball(z2, 1) if not g.is_identity()]
    assert {c.payload for c in candidates} == {g.payload for g in punctured}


# ---------------------------------------------------------------------------
# strong_icc_witness


def test_witness_free_group_first_hit(f2):
    x = f2.generator_element("x")
    result = strong_icc_witness(f2, [x], 3, 10)
    assert result.verified
    # breadth-first over an inverse-closed generating set: y^-1 has length 1
    # and is a valid extension, so the first hit is (1, y, y^-1)
    assert [repr(g) for g in result.gammas] == ["1", "y", "y^-1"]
    assert result.used_radius == 1


def test_witness_dihedral_exhaustion(dihedral):
    ab = dihedral.reduce_letters([("a", 1), ("b", 1)])
    result = strong_icc_witness(dihedral, [ab], 3, 10)
    assert not result.verified
    assert len(result.gammas) == 2  # the class of ab has exactly 2 elements


def test_witness_multiple_targets(f2):
    x = f2.generator_element("x")
    y = f2.generator_element("y")
    result = strong_icc_witness(f2, [x, y], 4, 10)
    assert result.verified
    for target in (x, y):
        conjugates = [g * target * ~g for g in result.gammas]
        assert len({c.payload for c in conjugates}) == len(result.gammas)


def test_witness_validation(f2):
    with pytest.raises(GroupUsageError):
        strong_icc_witness(f2, [f2.identity()], 3, 6)
    with pytest.raises(GroupUsageError):
        strong_icc_witness(f2, [], 3, 6)
    with pytest.raises(GroupUsageError):
        strong_icc_witness(f2, [f2.generator_element("x")], 0, 6)


def test_witness_conjugates_pairwise_distinct_when_verified(bs12):
    a = bs12.generator_element("a")
    result = strong_icc_witness(bs12, [a], 5, 8)
    assert result.verified
    conjugates = [g * a * ~g for g in result.gammas]
    assert len({c.payload for c in conjugates}) == 5
