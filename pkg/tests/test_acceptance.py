#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import numpy as np
import pytest
from families import (FlagSpec, GTSpec, PSSpec, count_flagged_ssyt, count_plane_partitions,
                      count_ssyt, flagged_face_marked, flagged_row_bounds, gelfand_tsetlin_marked,
                      gt_shape, pitman_stanley_marked, ps_polynomial_in_y, ps_shape,
                      random_gt_spec)
from jsonio import read_document, spec_from_json
from marked import count_bruteforce, ehrhart_polynomial, in_order_cone
from oracleCheck import check_family, formula_count, run_trials
from polynomial import evaluate, is_coefficient_nonnegative
from positivityReport import family_sweep, skew_sweep


@pytest.fixture
def ps_5_3(data_file):
    spec, flags = spec_from_json(read_document(data_file("ps_5_3.json")))
    assert flags is None
    return spec


@pytest.fixture
def gt_4_2(data_file):
    spec, _ = spec_from_json(read_document(data_file("gt_4_2.json")))
    return spec


def test_random_marked_posets_match_bruteforce():
    results = run_trials("random", trials=100, seed=0)
    assert len(results) == 100
    assert results["match"].all()


@pytest.mark.slow
def test_pitman_stanley_fixture(ps_5_3):
    assert ps_5_3 == PSSpec(5, 3, (2, 2, 0, 3, 0), (0, 1, 1, 2, 1))
    M = pitman_stanley_marked(ps_5_3)

    count = count_bruteforce(M)
    assert count > 0
    assert count == count_plane_partitions(ps_shape(ps_5_3), 4) == formula_count(M)

    g = ehrhart_polynomial(M)
    assert g.degree == 15
    assert is_coefficient_nonnegative(g)[0]
    assert check_family(ps_5_3, dilations=3)["match"].all()


@pytest.mark.slow
def test_gelfand_tsetlin_fixture(gt_4_2):
    assert isinstance(gt_4_2, GTSpec)
    M = gelfand_tsetlin_marked(gt_4_2)

    count = count_bruteforce(M)
    assert count > 0
    assert count == count_ssyt(gt_shape(gt_4_2), 3) == formula_count(M)

    g = ehrhart_polynomial(M)
    assert is_coefficient_nonnegative(g)[0]
    assert check_family(gt_4_2, dilations=3)["match"].all()


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_ps_polynomial_in_y_is_positive(k, m):
    f = ps_polynomial_in_y(k, m)
    assert is_coefficient_nonnegative(f)[0]
    ones = (1,) * k
    assert evaluate(f, ones) == count_bruteforce(pitman_stanley_marked(PSSpec(k, m, ones, (0,) * k)))


def test_bijection_round_trip():
    results = run_trials("bijection", trials=20, seed=0)
    assert results["match"].all()


def test_full_flags_reproduce_gt():
    rng = np.random.default_rng(4)
    for _ in range(10):
        spec = random_gt_spec(rng)
        full = FlagSpec((0,) * spec.k, (spec.m + 1,) * spec.k)
        M = flagged_face_marked(spec, full)
        expected = count_bruteforce(gelfand_tsetlin_marked(spec))
        assert count_bruteforce(M) == formula_count(M) == expected


def test_nontrivial_flags():
    spec = GTSpec(3, 2, (1, 1, 1), (0, 1, 0))
    flags = FlagSpec((0, 1, 1), (2, 3, 3))
    M = flagged_face_marked(spec, flags)
    assert in_order_cone(M)
    lower, upper = flagged_row_bounds(spec, flags)
    assert count_bruteforce(M) == formula_count(M) == count_flagged_ssyt(gt_shape(spec), 3, lower, upper)


def test_positivity_sweeps():
    sweep = family_sweep(PSSpec, max_k=2, max_m=1, max_entry=1)
    assert len(sweep) == 4 + 16
    assert sweep["Match"].all() and sweep["Nonnegative"].all()

    shapes = skew_sweep(max_parts=2, max_size=2)
    assert set(shapes["Shape"]) >= {"1", "2", "21/1", "22/1"}
    assert shapes["Nonnegative"].all()
