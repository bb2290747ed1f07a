#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass
from itertools import accumulate
from config import MAX_IDEALS, node_budget
from exceptions import (ContradictoryMarks, CycleDetected, InvalidShape, InvalidSpec,
                        QuotientCycle, SizeLimit)
from marked import (MarkedPoset, NaturalLabeling, natural_labeling_for,
                    product_formula_polynomial)
from poset import SkewShape, from_covers
from polynomial import substitute_variables

logger = logging.getLogger(__name__)


def _vector(values, k, name):
    values = tuple(int(v) for v in values)
    if len(values) != k:
        raise InvalidSpec(f"{name} must have {k} entries, got {len(values)}.")
    if any(v < 0 for v in values):
        raise InvalidSpec(f"{name} {list(values)} has a negative entry.")
    return values


@dataclass(frozen=True)
class PSSpec:
    """Data of the m-generalized Pitman-Stanley polytope PS_k^m(y, z)."""
    k: int
    m: int
    y: tuple
    z: tuple

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise InvalidSpec(f"k and m must be at least 1, got k={self.k}, m={self.m}.")
        object.__setattr__(self, "y", _vector(self.y, self.k, "y"))
        object.__setattr__(self, "z", _vector(self.z, self.k, "z"))

    @property
    def y_tilde(self):
        """Partial sums y_1 + ... + y_i."""
        return tuple(accumulate(self.y))

    @property
    def z_tilde(self):
        return tuple(accumulate(self.z))

    def dilate(self, n):
        return type(self)(self.k, self.m, tuple(n * v for v in self.y), tuple(n * v for v in self.z))


class GTSpec(PSSpec):
    """Data of the skew Gelfand-Tsetlin polytope GT_k^m(y, z)."""


@dataclass(frozen=True)
class FlagSpec:
    """Row flags: entries of row i lie in [a_i + 1, b_i]."""
    a: tuple
    b: tuple

    def validate(self, k, m):
        a = tuple(int(v) for v in self.a)
        b = tuple(int(v) for v in self.b)

        if len(a) != k or len(b) != k:
            raise InvalidSpec(f"Flags must have {k} entries.")
        if any(a[i] > a[i + 1] or b[i] > b[i + 1] for i in range(k - 1)):
            raise InvalidSpec(f"Flags a={list(a)}, b={list(b)} are not weakly increasing.")
        if any(not 0 <= lo < hi <= m + 1 for lo, hi in zip(a, b)):
            raise InvalidSpec(f"Flags need 0 <= a_i < b_i <= {m + 1}, got a={list(a)}, b={list(b)}.")


def _element_grid(k, m):
    """Elements (i, j), i in [k], j in [0, m+1], row-major."""
    cells = [(i, j) for i in range(1, k + 1) for j in range(m + 2)]
    return cells, {cell: index for index, cell in enumerate(cells)}


def _boundary_marks(spec, position):
    """Column 0 carries the z partial sums, column m+1 the y partial sums."""
    marks = {}
    for i, (low, high) in enumerate(zip(spec.z_tilde, spec.y_tilde), start=1):
        marks[position[(i, 0)]] = low
        marks[position[(i, spec.m + 1)]] = high
    return marks


def pitman_stanley_marked(spec):
    """
    Marked poset of PS_k^m(y, z): the product of a k-chain and an
    (m+2)-chain, (i, j) < (i, j+1) and (i, j) < (i+1, j), with column 0
    marked by the z partial sums and column m+1 by the y partial sums.

    Parameters
    ----------
    spec : PSSpec
        The family data.

    Returns
    -------
    M : MarkedPoset
        The marked poset, elements labelled "(i,j)" in row-major order.

    """
    cells, position = _element_grid(spec.k, spec.m)

    covers = []
    for (i, j), index in position.items():
        for neighbour in ((i, j + 1), (i + 1, j)):
            if neighbour in position:
                covers.append((index, position[neighbour]))

    P = from_covers([f"({i},{j})" for i, j in cells], covers)

    return MarkedPoset(P, _boundary_marks(spec, position))


def gelfand_tsetlin_marked(spec):
    """
    Marked poset of GT_k^m(y, z) with covers (i, j) < (i, j+1) < (i+1, j),
    column 0 marked by the z partial sums and column m+1 by the y partial
    sums.

    Parameters
    ----------
    spec : GTSpec
        The family data.

    Returns
    -------
    M : MarkedPoset
        The marked poset, elements labelled "(i,j)" in row-major order.

    """
    cells, position = _element_grid(spec.k, spec.m)

    covers = []
    for i in range(1, spec.k + 1):
        for j in range(spec.m + 1):
            covers.append((position[(i, j)], position[(i, j + 1)]))
            if i < spec.k:
                covers.append((position[(i, j + 1)], position[(i + 1, j)]))

    P = from_covers([f"({i},{j})" for i, j in cells], covers)

    return MarkedPoset(P, _boundary_marks(spec, position))


def flagged_face_marked(spec, flags):
    """
    Marked poset of the face of GT_k^m(y, z) cut out by x_{i,j} = x_{i,j-1}
    for all j outside [a_i + 1, b_i]. The elements in each equality are
    identified (union-find), covers are induced on the classes and the
    quotient is checked to be acyclic.

    Parameters
    ----------
    spec : GTSpec
        The family data.
    flags : FlagSpec
        The row flags.

    Returns
    -------
    M : MarkedPoset
        The quotient marked poset. Merged classes are labelled by joining
        their element labels with "=".

    """
    flags.validate(spec.k, spec.m)
    M = gelfand_tsetlin_marked(spec)
    P = M.poset
    _, position = _element_grid(spec.k, spec.m)

    parent = list(range(P.n))

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    # Merge along the defining equalities
    for i in range(1, spec.k + 1):
        for j in range(1, spec.m + 2):
            if not flags.a[i - 1] + 1 <= j <= flags.b[i - 1]:
                p, q = find(position[(i, j)]), find(position[(i, j - 1)])
                if p != q:
                    parent[max(p, q)] = min(p, q)

    # Classes ordered by their smallest element
    roots = sorted({find(p) for p in range(P.n)})
    class_of = {root: index for index, root in enumerate(roots)}
    groups = [[p for p in range(P.n) if find(p) == root] for root in roots]

    marks = {}
    for index, group in enumerate(groups):
        values = {M.marks[p] for p in group if p in M.marks}
        if len(values) > 1:
            labels = [P.labels[p] for p in group]
            raise ContradictoryMarks(f"Identified elements {labels} carry marks {sorted(values)}.")
        if values:
            marks[index] = values.pop()

    covers = {(class_of[find(p)], class_of[find(q)]) for p, q in P.covers if find(p) != find(q)}

    try:
        quotient = from_covers(["=".join(P.labels[p] for p in group) for group in groups],
                               sorted(covers))
    except CycleDetected as error:
        raise QuotientCycle(f"Identifying elements creates a cycle: {error}")

    return MarkedPoset(quotient, marks)


def ps_shape(spec):
    """
    The skew shape (y~_k, ..., y~_1)/(z~_k, ..., z~_1), rows stored top to
    bottom, so row i of the family sits at shape row k - i. None when some
    z~_i exceeds y~_i and the family is empty.
    """
    try:
        return SkewShape(tuple(reversed(spec.y_tilde)), tuple(reversed(spec.z_tilde)))
    except InvalidShape:
        return None


gt_shape = ps_shape


def _count_fillings(shape, row_bounds, increasing, strict_columns, budget=None):
    """
    Count fillings of a skew shape row by row. Rows are weakly increasing
    (or weakly decreasing), columns are compared with the cell above:
    increasing fillings need entry > above (strict_columns) or >= above,
    decreasing fillings need entry <= above.

    Parameters
    ----------
    shape : SkewShape
        The shape.
    row_bounds : list of (integer, integer)
        Allowed entry range per shape row, top to bottom.
    increasing : boolean
        Direction of rows and columns.
    strict_columns : boolean
        Whether columns must be strict.
    budget : integer, optional
        Search node budget. The default is config.node_budget().

    Returns
    -------
    count : integer
        The number of fillings.

    """
    budget = node_budget() if budget is None else budget
    rows = len(shape.lam)
    cache = {}
    nodes = 0

    def row_fillings(row, above):
        """All valid fillings of a row given the filling of the row above."""
        nonlocal nodes
        start, end = shape.mu[row], shape.lam[row]
        lo_row, hi_row = row_bounds[row]

        # Entry bounds per column from the cell above
        bounds = []
        for column in range(start + 1, end + 1):
            lo, hi = lo_row, hi_row
            if above is not None and column in above:
                value = above[column]
                if increasing:
                    lo = max(lo, value + 1 if strict_columns else value)
                else:
                    hi = min(hi, value)
            bounds.append((column, lo, hi))

        out = []
        filling = {}

        def place(index, previous):
            nonlocal nodes
            if index == len(bounds):
                out.append(dict(filling))
                return
            column, lo, hi = bounds[index]
            if previous is not None:
                if increasing:
                    lo = max(lo, previous)
                else:
                    hi = min(hi, previous)
            for value in range(lo, hi + 1):
                nodes += 1
                if nodes > budget:
                    raise SizeLimit(f"The filling search exceeded the node budget of {budget}.")
                filling[column] = value
                place(index + 1, value)
            filling.pop(column, None)

        place(0, None)
        return out

    def count(row, above):
        if row == rows:
            return 1
        key = (row, None if above is None else tuple(sorted(above.items())))
        if key not in cache:
            cache[key] = sum(count(row + 1, filling) for filling in row_fillings(row, above))
        return cache[key]

    return count(0, None)


def count_plane_partitions(shape, max_entry, budget=None):
    """
    Number of plane partitions of a skew shape, fillings weakly decreasing
    along rows and down columns, with entries in [1, max_entry].

    Parameters
    ----------
    shape : SkewShape
        The shape.
    max_entry : integer
        Largest allowed entry, at least 1.
    budget : integer, optional
        Search node budget. The default is config.node_budget().

    Returns
    -------
    count : integer
        The number of plane partitions.

    """
    if max_entry < 1:
        raise InvalidSpec(f"max_entry must be at least 1, got {max_entry}.")
    bounds = [(1, max_entry)] * len(shape.lam)
    return _count_fillings(shape, bounds, increasing=False, strict_columns=False, budget=budget)


def count_ssyt(shape, max_entry, budget=None):
    """
    Number of semi-standard Young tableaux of a skew shape, rows weakly and
    columns strictly increasing, with entries in [1, max_entry].
    """
    if max_entry < 1:
        raise InvalidSpec(f"max_entry must be at least 1, got {max_entry}.")
    bounds = [(1, max_entry)] * len(shape.lam)
    return _count_fillings(shape, bounds, increasing=True, strict_columns=True, budget=budget)


def count_flagged_ssyt(shape, max_entry, lower, upper, budget=None):
    """
    Number of SSYT with entries of shape row r (top to bottom) in
    [lower[r], upper[r]] and in [1, max_entry].
    """
    if len(lower) != len(shape.lam) or len(upper) != len(shape.lam):
        raise InvalidSpec(f"Row bounds must have {len(shape.lam)} entries.")
    bounds = [(max(1, lo), min(max_entry, hi)) for lo, hi in zip(lower, upper)]
    return _count_fillings(shape, bounds, increasing=True, strict_columns=True, budget=budget)


def flagged_row_bounds(spec, flags):
    """Shape row bounds for the flags; family row i is shape row k - i."""
    lower = [flags.a[i] + 1 for i in reversed(range(spec.k))]
    upper = [flags.b[i] for i in reversed(range(spec.k))]
    return lower, upper


def _row_counts(spec, point, position):
    """c[i][j] = x_{i,j} - z~_i for j in [1, m+1], per family row."""
    counts = []
    for i in range(1, spec.k + 1):
        base = spec.z_tilde[i - 1]
        counts.append([point[position[(i, j)]] - base for j in range(1, spec.m + 2)])
    return counts


def _rows_from_counts(counts):
    """Weakly increasing rows with c[j-1] entries from [j], top to bottom."""
    rows = []
    for row_counts in reversed(counts):
        row = []
        for j, count in enumerate(row_counts, start=1):
            row.extend([j] * (count - len(row)))
        rows.append(tuple(row))
    return tuple(rows)


def ps_point_to_plane_partition(spec, point):
    """
    Plane partition of a PS lattice point: row i holds x_{i,j} - z~_i
    entries from [j] in increasing reading, then every entry e becomes
    m + 2 - e so rows and columns decrease. Rows are returned top to bottom.
    """
    _, position = _element_grid(spec.k, spec.m)
    rows = _rows_from_counts(_row_counts(spec, point, position))
    return tuple(tuple(spec.m + 2 - e for e in row) for row in rows)


def gt_point_to_tableau(spec, point):
    """SSYT of a GT lattice point: row i holds x_{i,j} - z~_i entries from [j]."""
    _, position = _element_grid(spec.k, spec.m)
    return _rows_from_counts(_row_counts(spec, point, position))


def _aligned(shape, rows):
    return [dict(zip(range(shape.mu[r] + 1, shape.lam[r] + 1), row)) for r, row in enumerate(rows)]


def is_plane_partition(shape, rows, max_entry):
    """True iff rows fill the shape, weakly decreasing along rows and columns."""
    if [len(row) for row in rows] != [l - m for l, m in zip(shape.lam, shape.mu)]:
        return False
    aligned = _aligned(shape, rows)
    for r, row in enumerate(aligned):
        for column, value in row.items():
            if not 1 <= value <= max_entry:
                return False
            if column + 1 in row and row[column + 1] > value:
                return False
            if r > 0 and column in aligned[r - 1] and aligned[r - 1][column] < value:
                return False
    return True


def is_ssyt(shape, rows, max_entry):
    """True iff rows fill the shape as a semi-standard Young tableau."""
    if [len(row) for row in rows] != [l - m for l, m in zip(shape.lam, shape.mu)]:
        return False
    aligned = _aligned(shape, rows)
    for r, row in enumerate(aligned):
        for column, value in row.items():
            if not 1 <= value <= max_entry:
                return False
            if column + 1 in row and row[column + 1] < value:
                return False
            if r > 0 and column in aligned[r - 1] and aligned[r - 1][column] >= value:
                return False
    return True


def ps_polynomial_in_gaps(spec, max_ideals=MAX_IDEALS):
    """
    Multivariate counting polynomial of a PS instance in the gap variables
    of its canonical labeling.

    Returns
    -------
    f : MultiPoly
        Polynomial in t_1, ..., t_r.
    L : NaturalLabeling
        The labeling the gaps refer to.

    """
    M = pitman_stanley_marked(spec)
    L = natural_labeling_for(M)
    return product_formula_polynomial(M, L, max_ideals=max_ideals), L


def ps_polynomial_in_y(k, m, max_ideals=MAX_IDEALS):
    """
    Number of lattice points of PS_k^m(y, 0) as a polynomial in y_1, ..., y_k.
    The labeling puts the z-block (i, 0) before the y-block (i, m+1), valid
    for every y because z = 0. The z gaps vanish and the remaining gaps are
    y~_1 - z~_k = y_1 and y~_i - y~_{i-1} = y_i.

    Parameters
    ----------
    k : integer
        Number of rows.
    m : integer
        Number of interior columns.
    max_ideals : integer
        Cap on the number of ideals. The default is config.MAX_IDEALS.

    Returns
    -------
    f : MultiPoly
        Polynomial in y_1, ..., y_k.

    """
    spec = PSSpec(k, m, (1,) * k, (0,) * k)
    M = pitman_stanley_marked(spec)
    _, position = _element_grid(k, m)

    # Structural labeling, independent of the numeric y
    L = NaturalLabeling(tuple(position[(i, 0)] for i in range(1, k + 1)) +
                        tuple(position[(i, m + 1)] for i in range(1, k + 1)))

    f = product_formula_polynomial(M, L, max_ideals=max_ideals)

    # t_1, ..., t_{k-1} are the z gaps, t_{k-1+i} is y_i
    targets = [None if v < k - 1 else v - (k - 1) for v in range(f.nvars)]

    return substitute_variables(f, targets, k)


def random_ps_spec(rng, max_k=3, max_m=2, max_entry=2, cls=PSSpec):
    """Random family data with k <= max_k, m <= max_m and entries <= max_entry."""
    k = int(rng.integers(1, max_k + 1))
    m = int(rng.integers(1, max_m + 1))
    y = tuple(int(v) for v in rng.integers(0, max_entry + 1, size=k))
    z = tuple(int(v) for v in rng.integers(0, max_entry + 1, size=k))
    return cls(k, m, y, z)


def random_gt_spec(rng, max_k=3, max_m=2, max_entry=2):
    return random_ps_spec(rng, max_k, max_m, max_entry, cls=GTSpec)


def random_flags(rng, k, m):
    """Random weakly increasing flags with 0 <= a_i < b_i <= m + 1."""
    a = sorted(int(v) for v in rng.integers(0, m + 1, size=k))
    b = []
    for i in range(k):
        low = max(a[i] + 1, b[-1] if b else 0)
        b.append(int(rng.integers(low, m + 2)))
    return FlagSpec(tuple(a), tuple(b))


def family_marked(spec, flags=None):
    """Marked poset of a family instance, the flagged face when flags are given."""
    if flags is not None:
        return flagged_face_marked(spec, flags)
    if isinstance(spec, GTSpec):
        return gelfand_tsetlin_marked(spec)
    return pitman_stanley_marked(spec)


def tableau_count(spec, flags=None):
    """
    Lattice point count of a family instance through its tableaux: plane
    partitions for PS, SSYT for GT and flagged SSYT for a flagged face, all
    with entries from [m + 1]. Infeasible instances count 0.
    """
    shape = ps_shape(spec)
    if shape is None:
        return 0
    if flags is not None:
        lower, upper = flagged_row_bounds(spec, flags)
        return count_flagged_ssyt(shape, spec.m + 1, lower, upper)
    if isinstance(spec, GTSpec):
        return count_ssyt(shape, spec.m + 1)
    return count_plane_partitions(shape, spec.m + 1)
