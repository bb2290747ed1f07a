#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from config import MAX_CHAINS, MAX_IDEALS, MAX_LINEAR_EXTENSION_ELEMENTS
from exceptions import (GapNotPositive, InputError, NotAnExtension, NotNaturalLabeling,
                        OutsideOrderCone, RegionViolation, SizeLimit, VerificationFailure)
from order_poly import count_extensions, omega
from poset import (enumerate_ideals, induced_subposet, linear_extensions, mask_of,
                   maximal_elements, members, minimal_elements, topological_order, up_set)
from polynomial import MultiPoly, embed, evaluate, specialize_dilation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarkedPoset:
    """
    A poset P with a marking: integer values on the subset A of marked
    elements. A must contain every minimal and maximal element of P; the
    marking need not be order preserving.
    """
    poset: object
    marks: dict = field(default_factory=dict)

    def __post_init__(self):
        P = self.poset
        marks = {}
        for p, value in dict(self.marks).items():
            p = int(p)
            if not 0 <= p < P.n:
                raise InputError(f"Marked element {p} is out of range for {P.n} elements.")
            if isinstance(value, bool) or int(value) != value:
                raise InputError(f"Mark of '{P.labels[p]}' must be an integer, got {value!r}.")
            marks[p] = int(value)

        missing = [P.labels[p] for p in sorted(set(minimal_elements(P)) | set(maximal_elements(P)))
                   if p not in marks]
        if missing:
            raise InputError(f"Minimal and maximal elements must be marked, missing {missing}.")

        object.__setattr__(self, "marks", dict(sorted(marks.items())))

    @property
    def marked(self):
        """Mask of the marked elements A."""
        return mask_of(self.marks)

    @property
    def free(self):
        return self.poset.full & ~self.marked


@dataclass(frozen=True)
class NaturalLabeling:
    """Ordering a_0, ..., a_r of the marked elements, i < j whenever a_i < a_j."""
    elements: tuple

    @property
    def r(self):
        return len(self.elements) - 1


@dataclass(frozen=True)
class IdealChain:
    """Strict chain of order ideals I_0 < I_1 < ... < I_r, as masks."""
    ideals: tuple


def in_order_cone(M):
    """True iff the marking is order preserving on A."""
    P = M.poset
    for a, value in M.marks.items():
        for b in members(P.above[a] & M.marked):
            if M.marks[b] < value:
                return False
    return True


def validate_labeling(M, L):
    """Raise NotNaturalLabeling unless L orders A naturally."""
    P = M.poset
    elements = [int(a) for a in L.elements]

    if sorted(elements) != sorted(M.marks):
        raise NotNaturalLabeling(f"Labeling {elements} is not an ordering of the marked elements.")

    position = {a: i for i, a in enumerate(elements)}
    for a in elements:
        for b in members(P.above[a] & M.marked):
            if position[b] < position[a]:
                raise NotNaturalLabeling(f"'{P.labels[a]}' < '{P.labels[b]}' but it is labelled later.")


def labeling_values(M, L):
    return [M.marks[a] for a in L.elements]


def labeling_region_contains(M, L):
    """True iff lambda(a_0) <= lambda(a_1) <= ... <= lambda(a_r)."""
    values = labeling_values(M, L)
    return all(values[i] <= values[i + 1] for i in range(len(values) - 1))


def gaps(M, L):
    """Gap values t_i = lambda(a_i) - lambda(a_{i-1}) for i = 1, ..., r."""
    values = labeling_values(M, L)
    return [values[i] - values[i - 1] for i in range(1, len(values))]


def natural_labeling_for(M):
    """
    The canonical natural labeling of a marking in the order cone: marked
    elements sorted by value, ties broken by their position in the
    lexicographically first linear extension of the induced poset on A.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.

    Returns
    -------
    L : NaturalLabeling
        The labeling; its value sequence is weakly increasing.

    """
    if not in_order_cone(M):
        raise OutsideOrderCone("The marking is not order preserving on the marked elements.")

    A = induced_subposet(M.poset, M.marked)
    topological_index = {A.parent[q]: i for i, q in enumerate(topological_order(A))}

    elements = sorted(M.marks, key=lambda a: (M.marks[a], topological_index[a]))

    return NaturalLabeling(tuple(elements))


def all_natural_labelings(M, max_elements=MAX_LINEAR_EXTENSION_ELEMENTS):
    """Every natural labeling of A, i.e. the linear extensions of A."""
    A = induced_subposet(M.poset, M.marked)
    return [NaturalLabeling(tuple(A.parent[q] for q in extension))
            for extension in linear_extensions(A, max_elements)]


def count_bruteforce(M, budget=None, memoize=True):
    """
    Number of integer order preserving extensions of the marking to P,
    counted by depth first search over the free elements. Markings outside
    the order cone give 0.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.
    budget : integer, optional
        Search node budget. The default is config.node_budget().
    memoize : boolean
        Whether the search caches subtree counts. The default is True.

    Returns
    -------
    count : integer
        The number of lattice points of the marked order polytope.

    """
    if not in_order_cone(M):
        return 0
    return count_extensions(M.poset, M.marks, budget=budget, memoize=memoize)


def _level_candidates(M, L, max_ideals):
    """Ideals I allowed at level i: a_i in I and a_j not in I for j > i."""
    ideals = enumerate_ideals(M.poset, max_ideals)
    bits = [1 << a for a in L.elements]

    candidates = []
    for i, bit in enumerate(bits):
        later = sum(bits[i + 1:])
        candidates.append([ideal for ideal in ideals if ideal & bit and not ideal & later])

    return candidates


def enumerate_chains(M, L, max_ideals=MAX_IDEALS, max_chains=MAX_CHAINS):
    """
    All strict chains I_0 < ... < I_r of order ideals with a_i in
    I_i - I_{i-1}, level by level in the fixed ideal order.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.
    L : NaturalLabeling
        A natural labeling of the marked elements.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.
    max_chains : integer
        Cap on the number of chains. The default is config.MAX_CHAINS.

    Returns
    -------
    chains : list of IdealChain
        Every qualifying chain exactly once.

    """
    validate_labeling(M, L)
    P = M.poset
    candidates = _level_candidates(M, L, max_ideals)

    chains = []
    prefix = []

    def extend(i, previous):
        if i == len(candidates):
            # The top ideal contains every maximal element, so it is P
            if previous != P.full:
                raise VerificationFailure(f"Chain {prefix} does not end in P.")
            chains.append(IdealChain(tuple(prefix)))
            if len(chains) > max_chains:
                raise SizeLimit(f"More than {max_chains} ideal chains.")
            return
        for ideal in candidates[i]:
            if previous & ~ideal == 0 and ideal != previous:
                prefix.append(ideal)
                extend(i + 1, ideal)
                prefix.pop()

    extend(0, 0)
    logger.debug("Enumerated %d ideal chains", len(chains))

    return chains


def _factor_mask(M, L, lower, upper, i):
    """I_i - (I_{i-1} | up(a_i))."""
    return upper & ~(lower | up_set(M.poset, L.elements[i]))


def factor_subposets(M, L, max_ideals=MAX_IDEALS, max_chains=MAX_CHAINS):
    """Distinct factor posets of the product formula, keyed by mask."""
    factors = {}
    for chain in enumerate_chains(M, L, max_ideals, max_chains):
        for i in range(1, len(chain.ideals)):
            mask = _factor_mask(M, L, chain.ideals[i - 1], chain.ideals[i], i)
            if mask not in factors:
                factors[mask] = induced_subposet(M.poset, mask)
    return dict(sorted(factors.items()))


def product_formula_polynomial(M, L, method="dp", max_ideals=MAX_IDEALS, max_chains=MAX_CHAINS):
    """
    The multivariate counting polynomial in the gap variables t_1, ..., t_r:
    the sum over ideal chains of the products of the order polynomials of
    I_i - (I_{i-1} | up(a_i)) in t_i. Empty factor posets contribute 1.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.
    L : NaturalLabeling
        A natural labeling of the marked elements.
    method : string
        "dp" sums level by level over ideals, "chains" sums over the list of
        enumerate_chains. Both give the same polynomial. The default is "dp".
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.
    max_chains : integer
        Cap on the number of chains ("chains" only). The default is
        config.MAX_CHAINS.

    Returns
    -------
    f : MultiPoly
        Polynomial in r variables; variable index i - 1 stands for t_i.

    """
    validate_labeling(M, L)
    P = M.poset
    r = L.r

    # The empty poset has one point and no gap variables
    if r < 0:
        return MultiPoly.constant(1, 0)

    # Order polynomials of factor posets, and their embeddings per variable
    omegas = {}
    embedded = {}

    def order_polynomial(mask):
        if mask not in omegas:
            omegas[mask] = omega(induced_subposet(P, mask), max_ideals)
        return omegas[mask]

    def factor(p, i):
        if (p, i) not in embedded:
            embedded[p, i] = embed(p, i - 1, r)
        return embedded[p, i]

    if method == "chains":
        total = MultiPoly(r)
        for chain in enumerate_chains(M, L, max_ideals, max_chains):
            term = MultiPoly.constant(1, r)
            for i in range(1, r + 1):
                mask = _factor_mask(M, L, chain.ideals[i - 1], chain.ideals[i], i)
                term = term * factor(order_polynomial(mask), i)
            total = total + term

    elif method == "dp":
        candidates = _level_candidates(M, L, max_ideals)

        # Sum over the chain tails I_i < ... < I_r = P, from the top level down
        tails = {ideal: MultiPoly.constant(1, r) for ideal in candidates[r] if ideal == P.full}
        for i in range(r, 0, -1):
            # Tails indexed by element, so supersets of an ideal are an intersection
            containing = [set() for _ in range(P.n)]
            for upper in tails:
                for p in members(upper):
                    containing[p].add(upper)

            below = {}
            for lower in candidates[i - 1]:
                uppers = None
                for p in sorted(members(lower), key=lambda p: len(containing[p])):
                    uppers = set(containing[p]) if uppers is None else uppers & containing[p]
                    if not uppers:
                        break
                uppers.discard(lower)

                # Tails with equal factor order polynomials are summed before multiplying
                grouped = {}
                for upper in uppers:
                    poly = order_polynomial(_factor_mask(M, L, lower, upper, i))
                    grouped[poly] = grouped[poly] + tails[upper] if poly in grouped else tails[upper]

                total = MultiPoly(r)
                for poly, tail in grouped.items():
                    total = total + factor(poly, i) * tail
                if not total.is_zero():
                    below[lower] = total
            tails = below

        total = MultiPoly(r)
        for tail in tails.values():
            total = total + tail

    else:
        raise InputError(f"Unknown method '{method}', use 'dp' or 'chains'.")

    logger.debug("Product formula with %d terms from %d factor posets",
                 len(total.terms), len(omegas))

    return total


def evaluate_marked(M, L, f):
    """
    Evaluate a gap polynomial at the gaps of the marking.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.
    L : NaturalLabeling
        The labeling f belongs to.
    f : MultiPoly
        Polynomial in t_1, ..., t_r.

    Returns
    -------
    value : integer
        f(t_1, ..., t_r) with t_i = lambda(a_i) - lambda(a_{i-1}).

    """
    if not labeling_region_contains(M, L):
        raise RegionViolation(f"Marks {labeling_values(M, L)} are not weakly increasing along the labeling.")

    value = evaluate(f, gaps(M, L))

    if value.denominator != 1:
        raise VerificationFailure(f"The polynomial takes the non-integral value {value}.")

    return value.numerator


def with_marks(M, marks):
    return MarkedPoset(M.poset, marks)


def dilate_marking(M, n):
    """The marking n * lambda."""
    return with_marks(M, {a: n * value for a, value in M.marks.items()})


def shift_marking(M, c):
    """The marking lambda + c."""
    return with_marks(M, {a: value + c for a, value in M.marks.items()})


def ehrhart_polynomial(M, verify=True, max_ideals=MAX_IDEALS, budget=None):
    """
    Ehrhart polynomial of the marked order polytope. The n-th dilate of the
    polytope is the polytope of the marking n * lambda, so the polynomial
    is the product formula polynomial along the dilation vector of gaps.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset, marking in the order cone.
    verify : boolean
        Whether to compare against the all-equal marking at n = 0 and the
        brute-force counts at n = 1, 2, 3. The default is True.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.
    budget : integer, optional
        Node budget of the verification counts.

    Returns
    -------
    g : UniPoly
        The Ehrhart polynomial in n.

    """
    if not in_order_cone(M):
        raise OutsideOrderCone("The marking is not order preserving on the marked elements.")

    L = natural_labeling_for(M)
    f = product_formula_polynomial(M, L, max_ideals=max_ideals)
    g = specialize_dilation(f, gaps(M, L))

    if verify:
        # All marks equal: a single point
        flat = count_bruteforce(with_marks(M, {a: 0 for a in M.marks}), budget=budget)
        if g(0) != flat:
            raise VerificationFailure(f"Ehrhart polynomial gives {g(0)} at n = 0, expected {flat}.")

        for n in range(1, 4):
            expected = count_bruteforce(dilate_marking(M, n), budget=budget)
            if g(n) != expected:
                raise VerificationFailure(f"Ehrhart polynomial gives {g(n)} at n = {n}, "
                                          f"brute force counts {expected}.")

    return g


def _levels(M, L):
    """Level values s_i = lambda(a_i) = t_0 + ... + t_i."""
    values = labeling_values(M, L)
    if any(values[i] - values[i - 1] < 1 for i in range(1, len(values))):
        raise GapNotPositive(f"Marks {values} along the labeling do not increase strictly.")
    return values


def is_extension(M, point):
    """True iff point is an integer order preserving extension of the marking."""
    P = M.poset
    if sorted(point) != list(range(P.n)):
        return False
    if any(point[a] != value for a, value in M.marks.items()):
        return False
    return all(point[p] <= point[q] for p, q in P.covers)


def decompose_point(M, L, point):
    """
    Split an extension into its level-set chain and per-level maps.

    Parameters
    ----------
    M : MarkedPoset
        The marked poset.
    L : NaturalLabeling
        A natural labeling with strictly increasing marks.
    point : dict
        Element index -> integer value, an extension of the marking.

    Returns
    -------
    chain : IdealChain
        I_i = {p : point(p) <= lambda(a_i)}.
    maps : tuple of dicts
        maps[i - 1] is the map g on I_i - (I_{i-1} | up(a_i)) with
        g(p) = point(p) - (lambda(a_{i-1}) + 1), values in [0, t_i - 1].

    """
    validate_labeling(M, L)
    point = {int(p): int(value) for p, value in point.items()}
    if not is_extension(M, point):
        raise NotAnExtension("The point is not an order preserving extension of the marking.")

    P = M.poset
    levels = _levels(M, L)

    ideals = tuple(mask_of(p for p in range(P.n) if point[p] <= level) for level in levels)

    maps = []
    for i in range(1, len(levels)):
        mask = _factor_mask(M, L, ideals[i - 1], ideals[i], i)
        maps.append({p: point[p] - (levels[i - 1] + 1) for p in members(mask)})

    return IdealChain(ideals), tuple(maps)


def reconstruct_point(M, L, chain, maps):
    """
    Inverse of decompose_point: I_0 takes lambda(a_0), the factor poset of
    level i takes g + lambda(a_{i-1}) + 1 and I_i & up(a_i) takes lambda(a_i).
    """
    validate_labeling(M, L)
    P = M.poset
    levels = _levels(M, L)
    ideals = chain.ideals

    if len(ideals) != len(levels) or len(maps) != len(levels) - 1:
        raise InputError(f"Expected {len(levels)} ideals and {len(levels) - 1} level maps.")

    point = {p: levels[0] for p in members(ideals[0])}
    for i in range(1, len(levels)):
        mask = _factor_mask(M, L, ideals[i - 1], ideals[i], i)
        level_map = {int(p): int(value) for p, value in maps[i - 1].items()}

        if set(level_map) != set(members(mask)):
            raise InputError(f"Level {i} map is not defined on its factor poset.")

        for p in members(ideals[i] & ~ideals[i - 1]):
            if p in level_map:
                if not 0 <= level_map[p] <= levels[i] - levels[i - 1] - 1:
                    raise InputError(f"Level {i} value {level_map[p]} is outside [0, t_{i} - 1].")
                point[p] = level_map[p] + levels[i - 1] + 1
            else:
                point[p] = levels[i]

    if not is_extension(M, point):
        raise NotAnExtension("The chain and level maps do not give an extension of the marking.")

    return point


def enumerate_points(M, limit=10 ** 6):
    """
    List every integer extension of the marking, for bijection checks on
    small instances.
    """
    P = M.poset
    if not in_order_cone(M):
        return []

    order = [p for p in topological_order(P) if p not in M.marks]
    points = []
    values = dict(M.marks)

    def extend(k):
        if k == len(order):
            points.append(dict(sorted(values.items())))
            if len(points) > limit:
                raise SizeLimit(f"More than {limit} lattice points.")
            return
        p = order[k]
        lo = max(values[q] for q in members(P.below[p]) if q in values)
        hi = min(M.marks[q] for q in members(P.above[p]) if q in M.marks)
        for value in range(lo, hi + 1):
            values[p] = value
            extend(k + 1)
        values.pop(p, None)

    extend(0)

    return points
