#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
import numpy as np
from config import MAX_ELEMENTS, MAX_IDEALS, MAX_LINEAR_EXTENSION_ELEMENTS
from exceptions import (CycleDetected, DuplicateElement, EmptyShape, InputError,
                        InvalidShape, SizeLimit)

logger = logging.getLogger(__name__)


def popcount(mask):
    """Number of members of a subset mask."""
    return bin(mask).count("1")


def mask_of(elements):
    """Bit mask of an iterable of element indices."""
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def members(mask):
    """Ascending list of element indices in a subset mask."""
    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return out


@dataclass(frozen=True)
class Poset:
    """
    Immutable finite poset on the elements 0, ..., n-1.

    The comparability relation is stored as a read-only boolean numpy matrix,
    leq[p, q] is True iff p <= q. Subsets of the ground set are integer bit
    masks, bit p standing for element p. The masks below/above hold the
    strictly smaller/larger elements of every element and lower/upper hold
    its lower/upper covers.
    """
    labels: tuple
    covers: tuple
    leq: np.ndarray = field(compare=False, repr=False)
    below: tuple = field(compare=False, repr=False)
    above: tuple = field(compare=False, repr=False)
    lower: tuple = field(compare=False, repr=False)
    upper: tuple = field(compare=False, repr=False)
    parent: tuple = field(default=None, compare=False, repr=False)

    @property
    def n(self):
        return len(self.labels)

    @property
    def full(self):
        """Mask of the whole ground set."""
        return (1 << self.n) - 1

    def index(self, label):
        """Element index of a label."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"Unknown element '{label}'.")

    def less(self, p, q):
        """True iff p is strictly below q."""
        return bool(self.above[p] >> q & 1)


@dataclass(frozen=True)
class SkewShape:
    """
    A skew shape lambda/mu given by two partitions. mu is padded with zeros
    to the length of lambda.
    """
    lam: tuple
    mu: tuple = ()

    def __post_init__(self):
        lam = tuple(int(part) for part in self.lam)
        mu = tuple(int(part) for part in self.mu)

        if len(mu) > len(lam):
            raise InvalidShape(f"mu {list(mu)} is longer than lambda {list(lam)}.")

        # Pad mu with zeros
        mu = mu + (0,) * (len(lam) - len(mu))

        for name, parts in (("lambda", lam), ("mu", mu)):
            if any(part < 0 for part in parts):
                raise InvalidShape(f"{name} {list(parts)} has a negative part.")
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise InvalidShape(f"{name} {list(parts)} is not weakly decreasing.")

        if any(m > l for l, m in zip(lam, mu)):
            raise InvalidShape(f"mu {list(mu)} does not fit inside lambda {list(lam)}.")

        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    def cells(self):
        """Cells (i, j), 1-based, in row-major order."""
        return [(i + 1, j) for i in range(len(self.lam))
                for j in range(self.mu[i] + 1, self.lam[i] + 1)]

    def size(self):
        return sum(l - m for l, m in zip(self.lam, self.mu))

    def __str__(self):
        lam = "".join(str(part) for part in self.lam)
        mu = "".join(str(part) for part in self.mu if part > 0)
        return f"{lam}/{mu}" if mu else lam


def _closure(n, pairs):
    """
    Strict transitive closure of a relation given as index pairs.

    Parameters
    ----------
    n : integer
        Number of elements.
    pairs : iterable of (integer, integer)
        The generating relation.

    Returns
    -------
    reach : numpy.ndarray
        n x n boolean matrix, reach[p, q] iff q can be reached from p along
        one or more pairs.

    """
    reach = np.zeros((n, n), dtype=bool)
    for lower, upper in pairs:
        reach[lower, upper] = True

    # Warshall, one pivot at a time
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])

    return reach


def from_covers(labels, covers, parent=None):
    """
    Build a normalized poset from element labels and (lower, upper) pairs.
    The pairs need not be irredundant; the stored covers are the transitive
    reduction of their closure.

    Parameters
    ----------
    labels : list of strings
        Display name per element, distinct.
    covers : list of (integer, integer)
        Index pairs (lower, upper).
    parent : tuple of integers, optional
        Element indices in a parent poset, kept for induced subposets.

    Returns
    -------
    poset : Poset
        The normalized poset.

    """
    labels = tuple(str(label) for label in labels)
    n = len(labels)

    if n > MAX_ELEMENTS:
        raise SizeLimit(f"A poset may have at most {MAX_ELEMENTS} elements, got {n}.")

    # Labels must identify elements
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateElement(f"Element '{label}' occurs more than once.")
        seen.add(label)

    pairs = []
    for pair in covers:
        lower, upper = (int(index) for index in pair)
        if not (0 <= lower < n and 0 <= upper < n):
            raise InputError(f"Cover ({lower}, {upper}) is out of range for {n} elements.")
        if lower == upper:
            raise CycleDetected(f"Element '{labels[lower]}' covers itself.")
        pairs.append((lower, upper))

    lt = _closure(n, pairs)

    # A directed cycle shows up on the diagonal of the closure
    if n > 0 and lt.diagonal().any():
        on_cycle = [labels[p] for p in np.flatnonzero(lt.diagonal())]
        raise CycleDetected(f"The cover relations contain a cycle through {on_cycle}.")

    # Transitive reduction: drop every relation implied by two others
    reduced = lt & ~(lt.astype(np.int64) @ lt.astype(np.int64) > 0)
    cover_list = tuple((int(p), int(q)) for p, q in zip(*np.nonzero(reduced)))

    leq = lt | np.eye(n, dtype=bool)
    leq.flags.writeable = False

    below = tuple(mask_of(np.flatnonzero(lt[:, q])) for q in range(n))
    above = tuple(mask_of(np.flatnonzero(lt[p, :])) for p in range(n))
    lower = tuple(mask_of(np.flatnonzero(reduced[:, q])) for q in range(n))
    upper = tuple(mask_of(np.flatnonzero(reduced[p, :])) for p in range(n))

    return Poset(labels, cover_list, leq, below, above, lower, upper,
                 tuple(parent) if parent is not None else None)


def minimal_elements(P, S=None):
    """Minimal elements of the subset S (default: all of P)."""
    S = P.full if S is None else S
    return [p for p in members(S) if P.below[p] & S == 0]


def maximal_elements(P, S=None):
    """Maximal elements of the subset S (default: all of P)."""
    S = P.full if S is None else S
    return [p for p in members(S) if P.above[p] & S == 0]


def up_set(P, p):
    """The filter of all q with p <= q, p included."""
    return P.above[p] | 1 << p


def down_set(P, p):
    """The ideal of all q with q <= p, p included."""
    return P.below[p] | 1 << p


def complement(P, S):
    return P.full ^ S


def is_ideal(P, S):
    """True iff S is downward closed."""
    return all(P.below[p] & ~S == 0 for p in members(S))


def is_filter(P, S):
    """True iff S is upward closed."""
    return all(P.above[p] & ~S == 0 for p in members(S))


def topological_order(P):
    """The lexicographically smallest linear extension."""
    order = []
    placed = 0
    while len(order) < P.n:
        # Smallest element whose lower elements are all placed
        p = next(q for q in range(P.n) if not placed >> q & 1 and P.below[q] & ~placed == 0)
        order.append(p)
        placed |= 1 << p
    return order


def enumerate_ideals(P, max_ideals=MAX_IDEALS):
    """
    Enumerate all order ideals of P by breadth-first closure in the ideal
    lattice: starting from the empty ideal, every ideal is extended by the
    minimal elements of its complement.

    Parameters
    ----------
    P : Poset
        The poset.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.

    Returns
    -------
    ideals : list of integers
        Ideal masks, ascending by size and then by mask value.

    """
    if P.n > MAX_ELEMENTS:
        raise SizeLimit(f"A poset may have at most {MAX_ELEMENTS} elements, got {P.n}.")

    ideals = [0]
    level = [0]

    # Grow the ideals one element at a time, level by level
    while level:
        next_level = set()
        for ideal in level:
            for p in range(P.n):
                if not ideal >> p & 1 and P.below[p] & ~ideal == 0:
                    next_level.add(ideal | 1 << p)
        level = sorted(next_level)
        ideals.extend(level)

        if len(ideals) > max_ideals:
            raise SizeLimit(f"More than {max_ideals} order ideals.")

    logger.debug("Enumerated %d ideals of a %d-element poset", len(ideals), P.n)

    return ideals


def induced_subposet(P, S):
    """
    The subposet on S with the order inherited from P. Element i of the
    result is the i-th smallest index of S; parent maps it back to P.
    """
    elements = members(S)
    position = {p: i for i, p in enumerate(elements)}
    relations = [(position[p], position[q]) for p in elements for q in elements
                 if p != q and P.leq[p, q]]
    return from_covers([P.labels[p] for p in elements], relations, parent=elements)


def skew_shape_poset(shape):
    """
    Cell poset of a skew shape. Elements are the cells in row-major order,
    labelled "(i,j)"; the covers are (i+1, j) < (i, j) and (i, j+1) < (i, j).

    Parameters
    ----------
    shape : SkewShape
        The skew shape lambda/mu.

    Returns
    -------
    poset : Poset
        The cell poset.

    """
    cells = shape.cells()

    if not cells:
        raise EmptyShape(f"The skew shape {shape} has no cells.")

    position = {cell: index for index, cell in enumerate(cells)}

    covers = []
    for (i, j), index in position.items():
        # The cell below and the cell to the right are smaller
        for neighbour in ((i + 1, j), (i, j + 1)):
            if neighbour in position:
                covers.append((position[neighbour], index))

    return from_covers([f"({i},{j})" for i, j in cells], covers)


def chain(k):
    """The k-chain c1 < c2 < ... < ck."""
    return from_covers([f"c{i + 1}" for i in range(k)], [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    return from_covers([f"a{i + 1}" for i in range(k)], [])


def grid(a, b):
    """Product order on [a] x [b], elements (i,j) in row-major order."""
    cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    position = {cell: index for index, cell in enumerate(cells)}

    covers = []
    for (i, j), index in position.items():
        for neighbour in ((i + 1, j), (i, j + 1)):
            if neighbour in position:
                covers.append((index, position[neighbour]))

    return from_covers([f"({i},{j})" for i, j in cells], covers)


def linear_extensions(P, max_elements=MAX_LINEAR_EXTENSION_ELEMENTS):
    """
    All linear extensions of P in lexicographic order.

    Parameters
    ----------
    P : Poset
        The poset.
    max_elements : integer
        Largest poset size accepted. The default is 12.

    Returns
    -------
    extensions : list of lists
        Every extension as a list of element indices.

    """
    if P.n > max_elements:
        raise SizeLimit(f"Linear extensions are limited to {max_elements} elements, got {P.n}.")

    extensions = []
    order = []

    def extend(placed):
        if len(order) == P.n:
            extensions.append(list(order))
            return
        # Try the available elements in increasing index order
        for p in range(P.n):
            if not placed >> p & 1 and P.below[p] & ~placed == 0:
                order.append(p)
                extend(placed | 1 << p)
                order.pop()

    extend(0)

    return extensions
