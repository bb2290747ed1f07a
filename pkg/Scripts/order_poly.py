#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from fractions import Fraction
from scipy.special import comb
from config import MAX_IDEALS, MAX_LINEAR_EXTENSION_ELEMENTS, node_budget
from exceptions import InputError, NotNaturalLabeling, SizeLimit, VerificationFailure
from poset import (enumerate_ideals, induced_subposet, linear_extensions, members,
                   popcount, topological_order)
from polynomial import UniPoly, interpolate, shift

logger = logging.getLogger(__name__)


def count_extensions(P, fixed, lowest=None, highest=None, budget=None, memoize=True):
    """
    Count integer order preserving maps on P that agree with the fixed values
    and, optionally, take values in [lowest, highest]. This is a depth first
    search over the free elements along a linear extension: every free
    element ranges between the largest value below it and the smallest fixed
    value (or highest) above it.

    Parameters
    ----------
    P : Poset
        The poset.
    fixed : dict
        Element index -> integer value of the elements with a given value.
    lowest : integer, optional
        Global lower bound of all values. The default is None (no bound).
    highest : integer, optional
        Global upper bound of all values. The default is None (no bound).
    budget : integer, optional
        Maximum number of search nodes. The default is config.node_budget().
    memoize : boolean
        Whether to cache subtree counts on the values of the assigned
        elements that still bound unassigned ones. The default is True.

    Returns
    -------
    count : integer
        The number of maps.

    """
    budget = node_budget() if budget is None else budget

    # Fixed values that violate the order or the global bounds admit nothing
    for p, value in fixed.items():
        if lowest is not None and value < lowest or highest is not None and value > highest:
            return 0
        for q in members(P.above[p]):
            if q in fixed and fixed[q] < value:
                return 0

    order = [p for p in topological_order(P) if p not in fixed]
    if not order:
        return 1

    # Upper bound of every free element from the fixed elements above it
    ceiling = {}
    for p in order:
        bounds = [fixed[q] for q in members(P.above[p]) if q in fixed]
        if highest is not None:
            bounds.append(highest)
        if not bounds:
            raise InputError(f"Element '{P.labels[p]}' has no upper bound; the count is infinite.")
        ceiling[p] = min(bounds)

    floor_fixed = {}
    for p in order:
        bounds = [fixed[q] for q in members(P.below[p]) if q in fixed]
        if lowest is not None:
            bounds.append(lowest)
        if not bounds:
            raise InputError(f"Element '{P.labels[p]}' has no lower bound; the count is infinite.")
        floor_fixed[p] = max(bounds)

    # Assigned free elements with an unassigned upper cover
    free_mask = sum(1 << p for p in order)
    frontier = []
    for k in range(len(order)):
        unassigned = sum(1 << p for p in order[k + 1:])
        frontier.append([p for p in order[:k + 1] if P.upper[p] & unassigned])

    values = {}
    cache = {}
    nodes = 0

    def search(k):
        nonlocal nodes
        p = order[k]

        lo = floor_fixed[p]
        for q in members(P.lower[p] & free_mask):
            lo = max(lo, values[q])
        hi = ceiling[p]

        if lo > hi:
            return 0

        # The last free element contributes its interval length
        if k == len(order) - 1:
            nodes += 1
            return hi - lo + 1

        total = 0
        for value in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise SizeLimit(f"The search exceeded the node budget of {budget}.")

            values[p] = value
            if memoize:
                key = (k, tuple(values[q] for q in frontier[k]))
                if key not in cache:
                    cache[key] = search(k + 1)
                total += cache[key]
            else:
                total += search(k + 1)
        del values[p]

        return total

    count = search(0)
    logger.debug("Counted %d extensions with %d search nodes", count, nodes)

    return count


def count_maps_bruteforce(P, n, budget=None, memoize=True):
    """
    Number of order preserving maps from P to the chain [n] = {1, ..., n},
    counted by depth first search.

    Parameters
    ----------
    P : Poset
        The poset.
    n : integer
        Size of the target chain, n >= 0.
    budget : integer, optional
        Search node budget. The default is config.node_budget().
    memoize : boolean
        Whether the search caches subtree counts. The default is True.

    Returns
    -------
    count : integer
        The number of maps. The empty poset has exactly one map for every n.

    """
    if n < 0:
        raise InputError(f"The chain size must be nonnegative, got {n}.")
    if P.n == 0:
        return 1
    if n == 0:
        return 0

    return count_extensions(P, {}, lowest=1, highest=n, budget=budget, memoize=memoize)


def _ideal_lattice(P, max_ideals):
    """
    Ideals of P together with the covering pairs of the ideal lattice,
    grouped by the added element in linear extension order.
    """
    ideals = enumerate_ideals(P, max_ideals)
    position = {ideal: index for index, ideal in enumerate(ideals)}

    steps = []
    for p in topological_order(P):
        bit = 1 << p
        # I and I - {p}, where p is maximal in I
        pairs = [(index, position[ideal ^ bit]) for index, ideal in enumerate(ideals)
                 if ideal & bit and P.above[p] & ideal == 0]
        steps.append(pairs)

    return ideals, steps


def multichain_counts(P, largest, max_ideals=MAX_IDEALS):
    """
    Values Omega_P(1), ..., Omega_P(largest), each the number of multichains
    of order ideals J_1 <= ... <= J_n = P.

    Parameters
    ----------
    P : Poset
        The poset.
    largest : integer
        The largest n to evaluate.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.

    Returns
    -------
    counts : list of integers
        counts[n - 1] = Omega_P(n).

    """
    ideals, steps = _ideal_lattice(P, max_ideals)

    # Number of multichains ending in each ideal, starting from length one
    vector = [1] * len(ideals)
    counts = []
    for n in range(1, largest + 1):
        counts.append(vector[-1])
        if n == largest:
            break

        # Replace the vector by its sum over all sub-ideals
        vector = list(vector)
        for pairs in steps:
            for upper, lower in pairs:
                vector[upper] += vector[lower]

    return counts


def omega(P, max_ideals=MAX_IDEALS):
    """
    The order polynomial Omega_P(n), from the multichain counts at
    n = 1, ..., |P| + 1 and exact interpolation.

    Parameters
    ----------
    P : Poset
        The poset.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.

    Returns
    -------
    p : UniPoly
        The order polynomial; the constant 1 for the empty poset.

    """
    if P.n == 0:
        return UniPoly.constant(1)

    counts = multichain_counts(P, P.n + 1, max_ideals)
    p = interpolate([(n, count) for n, count in enumerate(counts, start=1)])

    # Sanity checks that are not interpolation input
    if p(0) != 0:
        raise VerificationFailure(f"Omega_P(0) = {p(0)} for a nonempty poset.")
    if p.degree != P.n:
        raise VerificationFailure(f"Omega_P has degree {p.degree}, expected {P.n}.")

    return p


def omega_via_descents(P, natural_labeling, max_elements=MAX_LINEAR_EXTENSION_ELEMENTS):
    """
    The order polynomial from descents of linear extensions: the sum over
    all linear extensions w of binom(n + |P| - 1 - des(w), |P|), where
    des(w) counts the descents of w read in the natural labeling.

    Parameters
    ----------
    P : Poset
        The poset.
    natural_labeling : list of integers
        Element indices in label order; element natural_labeling[i] gets
        label i.
    max_elements : integer
        Largest poset size accepted. The default is 12.

    Returns
    -------
    p : UniPoly
        The order polynomial.

    """
    natural_labeling = [int(p) for p in natural_labeling]
    if sorted(natural_labeling) != list(range(P.n)):
        raise NotNaturalLabeling(f"{natural_labeling} is not an ordering of the {P.n} elements.")

    label = {p: i for i, p in enumerate(natural_labeling)}
    for p, q in P.covers:
        if label[p] > label[q]:
            raise NotNaturalLabeling(f"'{P.labels[p]}' < '{P.labels[q]}' but its label is larger.")

    if P.n == 0:
        return UniPoly.constant(1)

    # Descent statistic of every linear extension
    descents = {}
    for extension in linear_extensions(P, max_elements):
        labels = [label[p] for p in extension]
        des = sum(1 for a, b in zip(labels, labels[1:]) if a > b)
        descents[des] = descents.get(des, 0) + 1

    size = P.n
    points = []
    for n in range(1, size + 2):
        value = sum(multiplicity * comb(n + size - 1 - des, size, exact=True)
                    for des, multiplicity in descents.items())
        points.append((n, value))

    return interpolate(points)


def order_polytope_ehrhart(P, max_ideals=MAX_IDEALS):
    """Ehrhart polynomial of the order polytope, E(n) = Omega_P(n + 1)."""
    return shift(omega(P, max_ideals), 1)


def linear_coefficient(P, max_ideals=MAX_IDEALS):
    return omega(P, max_ideals).coefficient(1)


def convex_subsets(P, max_ideals=MAX_IDEALS):
    """
    All nonempty convex subsets of P, each written as I - J for ideals
    J <= I, as ascending masks.
    """
    ideals = enumerate_ideals(P, max_ideals)

    if len(ideals) ** 2 > max_ideals:
        raise SizeLimit(f"{len(ideals)} ideals give too many ideal pairs.")

    subsets = {upper & ~lower for upper in ideals for lower in ideals
               if lower & ~upper == 0 and upper != lower}

    return sorted(subsets, key=lambda mask: (popcount(mask), mask))


def linear_term_criterion(P, max_ideals=MAX_IDEALS):
    """
    Check that every convex subposet of P, i.e. every subposet obtained by
    removing an ideal and a filter, has an order polynomial with
    nonnegative linear coefficient.

    Parameters
    ----------
    P : Poset
        The poset.
    max_ideals : integer
        Cap on ideals and ideal pairs. The default is config.MAX_IDEALS.

    Returns
    -------
    holds : bool
        True iff all linear coefficients are nonnegative.
    offenders : dict
        Subset mask -> negative linear coefficient.

    """
    offenders = {}
    for mask in convex_subsets(P, max_ideals):
        coefficient = linear_coefficient(induced_subposet(P, mask), max_ideals)
        if coefficient < 0:
            offenders[mask] = Fraction(coefficient)

    return not offenders, offenders
