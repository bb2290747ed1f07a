#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from exceptions import CycleDetected, DuplicateElement, EmptyShape, InvalidShape, SizeLimit
from order_poly import count_maps_bruteforce
from poset import (SkewShape, antichain, chain, complement, down_set, enumerate_ideals,
                   from_covers, grid, induced_subposet, is_filter, is_ideal, linear_extensions,
                   mask_of, maximal_elements, members, minimal_elements, popcount,
                   skew_shape_poset, topological_order, up_set)


@st.composite
def posets(draw, max_elements=7):
    """Random posets from covers oriented from smaller to larger index."""
    n = draw(st.integers(0, max_elements))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_covers([f"p{i}" for i in range(n)], covers)


def count_ideals_recursively(P, S):
    """Ideals of the subposet on S: a maximal element is either in or out."""
    if S == 0:
        return 1
    p = maximal_elements(P, S)[0]
    # Ideals with p contain everything below it
    return (count_ideals_recursively(P, S & ~(1 << p)) +
            count_ideals_recursively(P, S & ~down_set(P, p)))


def test_singleton():
    P = from_covers(["a"], [])
    assert P.n == 1
    assert P.covers == ()
    assert np.array_equal(P.leq, np.eye(1, dtype=bool))


def test_two_cycle():
    with pytest.raises(CycleDetected):
        from_covers(["a", "b"], [(0, 1), (1, 0)])


def test_self_loop():
    with pytest.raises(CycleDetected):
        from_covers(["a"], [(0, 0)])


def test_covers_are_reduced():
    P = from_covers(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])
    assert P.covers == ((0, 1), (1, 2))
    assert P.leq[0, 2]
    assert P.less(0, 2) and not P.less(2, 0)


def test_duplicate_label():
    with pytest.raises(DuplicateElement):
        from_covers(["a", "a"], [])


def test_element_limit():
    with pytest.raises(SizeLimit):
        antichain(65)


def test_up_set():
    P = chain(3)
    assert up_set(P, 0) == 0b111
    assert up_set(P, 2) == 0b100
    assert up_set(antichain(2), 0) == 0b01
    assert down_set(P, 1) == 0b011


def test_ideal_and_filter():
    P = chain(3)
    assert is_ideal(P, 0b011)
    assert not is_ideal(P, 0b010)
    assert not is_filter(P, 0b010)
    assert is_filter(P, 0b110)
    assert is_ideal(P, 0) and is_filter(P, 0)


def test_ideal_counts():
    assert enumerate_ideals(chain(3)) == [0, 0b1, 0b11, 0b111]
    assert len(enumerate_ideals(antichain(3))) == 8
    assert len(enumerate_ideals(chain(0))) == 1


def test_ideal_order_is_by_size_then_mask():
    ideals = enumerate_ideals(grid(2, 3))
    keys = [(popcount(ideal), ideal) for ideal in ideals]
    assert keys == sorted(keys)


def test_ideal_cap():
    with pytest.raises(SizeLimit):
        enumerate_ideals(antichain(10), max_ideals=100)


def test_skew_22_1_ideals_match_two_level_maps():
    P = skew_shape_poset(SkewShape((2, 2), (1,)))
    assert len(enumerate_ideals(P)) == count_maps_bruteforce(P, 2) == 5


def test_induced_subposet():
    P = chain(3)
    Q = induced_subposet(P, 0b101)
    assert Q.n == 2
    assert Q.covers == ((0, 1),)
    assert Q.parent == (0, 2)
    assert Q.labels == ("c1", "c3")

    assert induced_subposet(P, 0).n == 0


def test_grid_diagonal_is_antichain():
    P = grid(2, 2)
    diagonal = mask_of([P.index("(1,2)"), P.index("(2,1)")])
    assert induced_subposet(P, diagonal).covers == ()


def test_skew_6533_211_shape():
    P = skew_shape_poset(SkewShape((6, 5, 3, 3), (2, 1, 1)))
    assert P.n == 13
    assert P.labels[0] == "(1,3)"
    # Nothing lies below or to the right of the last cell of the bottom row
    assert P.index("(4,3)") in minimal_elements(P)


def test_single_row_is_chain():
    P = skew_shape_poset(SkewShape((4,)))
    assert P.n == 4
    assert len(P.covers) == 3
    assert len(linear_extensions(P)) == 1


def test_skew_21_1_is_antichain():
    P = skew_shape_poset(SkewShape((2, 1), (1,)))
    assert P.labels == ("(1,2)", "(2,1)")
    assert P.covers == ()


def test_empty_shape():
    with pytest.raises(EmptyShape):
        skew_shape_poset(SkewShape((2, 1), (2, 1)))


@pytest.mark.parametrize("lam, mu", [((1, 2), ()), ((2, 1), (3,)), ((2,), (1, 1)), ((2, -1), ())])
def test_invalid_shape(lam, mu):
    with pytest.raises(InvalidShape):
        SkewShape(lam, mu)


def test_shape_text():
    assert str(SkewShape((6, 5, 3, 3), (2, 1, 1))) == "6533/211"
    assert str(SkewShape((3, 1))) == "31"
    assert SkewShape((6, 5, 3, 3), (2, 1, 1)).size() == 13


def test_named_posets():
    assert grid(1, 4).covers == chain(4).covers
    assert grid(2, 2).n == 4 and len(grid(2, 2).covers) == 4
    assert chain(0).n == 0


def test_linear_extensions():
    assert len(linear_extensions(antichain(3))) == 6
    assert linear_extensions(chain(4)) == [[0, 1, 2, 3]]
    assert len(linear_extensions(grid(2, 2))) == 2
    with pytest.raises(SizeLimit):
        linear_extensions(antichain(13))


def test_topological_order_is_first_extension():
    P = grid(2, 3)
    assert topological_order(P) == linear_extensions(P)[0]


@given(posets())
@settings(max_examples=60, deadline=None)
def test_ideals_are_ideals(P):
    ideals = enumerate_ideals(P)
    assert len(set(ideals)) == len(ideals)
    for ideal in ideals:
        assert is_ideal(P, ideal)
        assert is_filter(P, complement(P, ideal))
    assert len(ideals) == count_ideals_recursively(P, P.full)


@given(posets())
@settings(max_examples=60, deadline=None)
def test_closure_recomputed_from_covers(P):
    Q = from_covers(P.labels, P.covers)
    assert np.array_equal(Q.leq, P.leq)
    assert Q.covers == P.covers


@given(posets(), st.data())
@settings(max_examples=60, deadline=None)
def test_up_sets_are_filters(P, data):
    if P.n == 0:
        return
    p = data.draw(st.integers(0, P.n - 1))
    assert is_filter(P, up_set(P, p))
    assert is_ideal(P, complement(P, up_set(P, p)))
    assert p in members(up_set(P, p))
