#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from fractions import Fraction
from functools import lru_cache
import numpy as np
import pytest
from exceptions import InvalidSpec
from families import (FlagSpec, GTSpec, PSSpec, count_flagged_ssyt, count_plane_partitions,
                      count_ssyt, flagged_face_marked, flagged_row_bounds, gelfand_tsetlin_marked,
                      gt_point_to_tableau, gt_shape, is_plane_partition, is_ssyt,
                      pitman_stanley_marked, ps_point_to_plane_partition, ps_polynomial_in_gaps,
                      ps_polynomial_in_y, ps_shape, random_flags, tableau_count)
from marked import (count_bruteforce, dilate_marking, enumerate_chains, enumerate_points,
                    evaluate_marked, labeling_values, natural_labeling_for)
from oracleCheck import check_family, run_trials
from poset import SkewShape, enumerate_ideals, members
from polynomial import MultiPoly, evaluate, is_coefficient_nonnegative


def boundary_marks(M, k, m):
    """Marks of column 0 and column m+1, row by row."""
    P = M.poset
    left = tuple(M.marks[P.index(f"({i},0)")] for i in range(1, k + 1))
    right = tuple(M.marks[P.index(f"({i},{m + 1})")] for i in range(1, k + 1))
    return left, right


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        PSSpec(0, 1, (), ())
    with pytest.raises(InvalidSpec):
        PSSpec(2, 1, (1,), (0, 0))
    with pytest.raises(InvalidSpec):
        GTSpec(1, 1, (-1,), (0,))


def test_partial_sums_and_dilation():
    spec = PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1))
    assert spec.y_tilde == (2, 4, 4, 7, 7)
    assert spec.z_tilde == (0, 1, 2, 4, 5)
    assert spec.dilate(2) == PSSpec(5, 3, (4, 4, 0, 6, 0), (0, 2, 2, 4, 2))
    assert isinstance(GTSpec(1, 1, (1,), (0,)).dilate(3), GTSpec)


def test_ps_5_3_marking():
    M = pitman_stanley_marked(PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1)))
    assert M.poset.n == 25
    assert boundary_marks(M, 5, 3) == ((0, 1, 2, 4, 5), (2, 4, 4, 7, 7))
    assert len(members(M.free)) == 15


def test_ps_5_3_labeling_values():
    M = pitman_stanley_marked(PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1)))
    assert labeling_values(M, natural_labeling_for(M)) == [0, 1, 2, 2, 4, 4, 4, 5, 7, 7]


def test_ps_5_3_dilates():
    # Memoized search on the large dilates
    M = pitman_stanley_marked(PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1)))
    assert count_bruteforce(dilate_marking(M, 2)) == 85848000
    assert count_bruteforce(dilate_marking(M, 3)) == 7621231464


def test_gt_4_2_marking():
    M = gelfand_tsetlin_marked(GTSpec(4, 2, (1, 0, 1, 2), (0, 0, 1, 0)))
    assert M.poset.n == 16
    assert boundary_marks(M, 4, 2) == ((0, 0, 1, 1), (1, 1, 2, 4))


def test_gt_4_2_chain_count():
    M = gelfand_tsetlin_marked(GTSpec(4, 2, (1, 0, 1, 2), (0, 0, 1, 0)))
    L = natural_labeling_for(M)
    ideals = enumerate_ideals(M.poset)

    @lru_cache(maxsize=None)
    def count(i, previous):
        # a_i enters at level i
        if i == len(L.elements):
            return int(previous == M.poset.full)
        bit = 1 << L.elements[i]
        return sum(count(i + 1, ideal) for ideal in ideals
                   if previous & ~ideal == 0 and ideal & bit and not previous & bit)

    chains = enumerate_chains(M, L)
    assert len(chains) > 0
    assert len(chains) == count(0, 0)


def test_smallest_instances():
    assert count_bruteforce(pitman_stanley_marked(PSSpec(1, 1, (1,), (0,)))) == 2
    assert count_bruteforce(gelfand_tsetlin_marked(GTSpec(1, 1, (2,), (0,)))) == 3


def test_gt_covers():
    P = gelfand_tsetlin_marked(GTSpec(2, 1, (1, 1), (0, 0))).poset
    covers = {(P.labels[p], P.labels[q]) for p, q in P.covers}
    assert ("(1,0)", "(1,1)") in covers
    assert ("(1,1)", "(2,0)") in covers
    assert ("(1,2)", "(2,1)") in covers
    assert ("(1,0)", "(2,0)") not in covers


def test_plane_partition_counts():
    assert count_plane_partitions(SkewShape((1,)), 4) == 4
    assert count_plane_partitions(SkewShape((2,)), 2) == 3
    # 2 x 2 square with entries in {1, 2}
    assert count_plane_partitions(SkewShape((2, 2)), 2) == 6
    with pytest.raises(InvalidSpec):
        count_plane_partitions(SkewShape((1,)), 0)


def test_ssyt_counts():
    assert count_ssyt(SkewShape((1, 1)), 2) == 1
    assert count_ssyt(SkewShape((2, 1)), 3) == 8
    assert count_ssyt(SkewShape((1, 1, 1)), 2) == 0


def test_ssyt_matches_gt_marked():
    # Shape 21 is (y~_2, y~_1) for y = (1, 1), z = 0
    spec = GTSpec(2, 2, (1, 1), (0, 0))
    assert gt_shape(spec) == SkewShape((2, 1))
    assert count_bruteforce(gelfand_tsetlin_marked(spec)) == count_ssyt(SkewShape((2, 1)), 3) == 8


def test_shapes():
    spec = PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1))
    assert str(ps_shape(spec)) == "77442/5421"
    assert str(gt_shape(GTSpec(4, 2, (1, 0, 1, 2), (0, 0, 1, 0)))) == "4211/11"
    assert ps_shape(PSSpec(2, 1, (0, 0), (1, 0))) is None
    assert tableau_count(PSSpec(2, 1, (0, 0), (1, 0))) == 0


def test_infeasible_dilates_match():
    results = check_family(PSSpec(2, 1, (0, 0), (1, 0)))
    assert list(results["n"]) == [1, 2, 3]
    assert results["match"].all()
    assert (results["oracle"] == 0).all()


def test_ps_polynomial_in_y():
    assert ps_polynomial_in_y(1, 1) == MultiPoly(1, {(1,): 1, (0,): 1})
    expected = MultiPoly(2, {(2, 0): Fraction(1, 2), (1, 1): 1, (1, 0): Fraction(3, 2),
                             (0, 1): 1, (0, 0): 1})
    assert ps_polynomial_in_y(2, 1) == expected


@pytest.mark.parametrize("k, m", [(1, 2), (2, 2), (3, 1)])
def test_ps_polynomial_in_y_counts(k, m):
    f = ps_polynomial_in_y(k, m)
    assert is_coefficient_nonnegative(f)[0]
    for y in [(1,) * k, tuple(range(k)), (2,) + (0,) * (k - 1)]:
        spec = PSSpec(k, m, y, (0,) * k)
        assert evaluate(f, y) == count_bruteforce(pitman_stanley_marked(spec))


def test_ps_polynomial_in_gaps():
    spec = PSSpec(2, 2, (1, 2), (1, 0))
    f, L = ps_polynomial_in_gaps(spec)
    M = pitman_stanley_marked(spec)
    assert evaluate_marked(M, L, f) == count_bruteforce(M) == tableau_count(spec)
    assert is_coefficient_nonnegative(f)[0]


def test_ps_correspondence_is_bijective():
    spec = PSSpec(2, 2, (1, 1), (0, 1))
    M = pitman_stanley_marked(spec)
    shape = ps_shape(spec)
    partitions = [ps_point_to_plane_partition(spec, point) for point in enumerate_points(M)]
    assert all(is_plane_partition(shape, rows, spec.m + 1) for rows in partitions)
    assert len(set(partitions)) == len(partitions) == count_plane_partitions(shape, spec.m + 1)


def test_ps_correspondence_single_cell():
    spec = PSSpec(1, 1, (1,), (0,))
    assert ps_point_to_plane_partition(spec, {0: 0, 1: 0, 2: 1}) == ((1,),)
    assert ps_point_to_plane_partition(spec, {0: 0, 1: 1, 2: 1}) == ((2,),)


def test_gt_correspondence_is_bijective():
    spec = GTSpec(3, 2, (1, 1, 1), (0, 1, 0))
    M = gelfand_tsetlin_marked(spec)
    shape = gt_shape(spec)
    tableaux = [gt_point_to_tableau(spec, point) for point in enumerate_points(M)]
    assert all(is_ssyt(shape, rows, spec.m + 1) for rows in tableaux)
    assert len(set(tableaux)) == len(tableaux) == count_ssyt(shape, spec.m + 1)


def test_gt_tableau_example():
    spec = GTSpec(2, 2, (1, 1), (0, 0))
    P = gelfand_tsetlin_marked(spec).poset
    values = {"(1,0)": 0, "(1,1)": 0, "(1,2)": 1, "(1,3)": 1,
              "(2,0)": 0, "(2,1)": 1, "(2,2)": 2, "(2,3)": 2}
    point = {P.index(label): value for label, value in values.items()}
    assert gt_point_to_tableau(spec, point) == ((1, 2), (2,))


def test_flag_validation():
    for a, b in [((1, 0), (2, 3)), ((0, 0), (3, 2)), ((1, 1), (1, 3)), ((0, 0), (2, 4))]:
        with pytest.raises(InvalidSpec):
            FlagSpec(a, b).validate(2, 2)


def test_full_flags_are_the_identity():
    spec = GTSpec(3, 2, (1, 0, 2), (0, 1, 0))
    M = gelfand_tsetlin_marked(spec)
    Q = flagged_face_marked(spec, FlagSpec((0, 0, 0), (3, 3, 3)))
    assert Q.poset.labels == M.poset.labels
    assert Q.poset.covers == M.poset.covers
    assert Q.marks == M.marks


def test_collapsed_row():
    spec = GTSpec(2, 2, (1, 1), (0, 1))
    flags = FlagSpec((0, 2), (3, 3))
    M = flagged_face_marked(spec, flags)
    assert M.poset.n == 6
    # Only row 1 keeps free elements
    assert all(M.poset.labels[p].startswith("(1,") for p in members(M.free))

    lower, upper = flagged_row_bounds(spec, flags)
    assert (lower, upper) == ([3, 1], [3, 3])
    assert count_bruteforce(M) == count_flagged_ssyt(gt_shape(spec), 3, lower, upper) == 3


def test_random_flags_are_valid():
    rng = np.random.default_rng(2)
    for _ in range(50):
        flags = random_flags(rng, 3, 2)
        flags.validate(3, 2)


@pytest.mark.parametrize("kind", ["ps", "gt", "flagged"])
def test_three_way_equality(kind):
    results = run_trials(kind, trials=15, seed=1)
    assert results["match"].all()
