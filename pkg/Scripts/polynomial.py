#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exact polynomials over the rationals.

UniPoly holds a dense coefficient tuple (index = degree) without trailing
zeros, MultiPoly a sparse map from exponent vectors to nonzero coefficients.
All coefficients are fractions.Fraction, so arithmetic is exact with
arbitrary-precision integers.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from exceptions import DuplicateNode, InputError, NegativeDilationVector, VarMismatch


def _rat(value):
    """Convert integers, fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InputError(f"Floating point coefficient {value} is not exact.")
    return Fraction(value)


def _format_rat(value):
    """p/q with q omitted when it is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _join_terms(pieces):
    """Join (coefficient, monomial text) pairs into canonical text."""
    if not pieces:
        return "0"

    text = ""
    for position, (coeff, monomial) in enumerate(pieces):
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)

        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{_format_rat(magnitude)}*{monomial}"
        else:
            body = _format_rat(magnitude)

        if position == 0:
            text = f"-{body}" if sign == "-" else body
        else:
            text += f" {sign} {body}"

    return text


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial, coeffs[d] is the coefficient of x^d."""
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [_rat(c) for c in self.coeffs]

        # Canonical form has no trailing zeros
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()

        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, d):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        return mul(self, other)

    def scale(self, factor):
        factor = _rat(factor)
        return UniPoly(tuple(c * factor for c in self.coeffs))

    def to_text(self, var="n"):
        pieces = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            monomial = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
            pieces.append((c, monomial))
        return _join_terms(pieces)

    def __str__(self):
        return self.to_text()


def _graded_lex_key(exponent):
    """Sort key putting higher total degree first, then larger exponents."""
    return (-sum(exponent), tuple(-e for e in exponent))


@dataclass(frozen=True)
class MultiPoly:
    """
    Sparse polynomial in nvars variables. terms maps exponent tuples of
    length nvars to nonzero Fractions.
    """
    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for exponent, coeff in dict(self.terms).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != self.nvars:
                raise VarMismatch(f"Exponent {exponent} does not have {self.nvars} entries.")
            if any(e < 0 for e in exponent):
                raise InputError(f"Exponent {exponent} has a negative entry.")
            coeff = _rat(coeff)
            if coeff != 0:
                terms[exponent] = terms.get(exponent, Fraction(0)) + coeff

        # Drop terms cancelled while merging and store in graded-lex order
        ordered = sorted((e for e in terms if terms[e] != 0), key=_graded_lex_key)
        object.__setattr__(self, "terms", {e: terms[e] for e in ordered})

    @classmethod
    def constant(cls, value, nvars):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, var, nvars):
        if not 0 <= var < nvars:
            raise VarMismatch(f"Variable {var} is out of range for {nvars} variables.")
        return cls(nvars, {tuple(1 if i == var else 0 for i in range(nvars)): 1})

    @property
    def total_degree(self):
        """Total degree, -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self):
        return not self.terms

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), Fraction(0))

    def __call__(self, *point):
        return evaluate(self, point)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        return mul(self, other)

    def to_text(self, names=None):
        """Canonical rendering, variables named t1, ..., tr by default."""
        names = names or [f"t{i + 1}" for i in range(self.nvars)]
        pieces = []
        for exponent, coeff in self.terms.items():
            factors = [names[i] if e == 1 else f"{names[i]}^{e}"
                       for i, e in enumerate(exponent) if e > 0]
            pieces.append((coeff, "*".join(factors)))
        return _join_terms(pieces)

    def __str__(self):
        return self.to_text()

    def to_json(self):
        return {"nvars": self.nvars,
                "terms": [{"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                          for e, c in self.terms.items()]}

    @classmethod
    def from_json(cls, document):
        try:
            nvars = int(document["nvars"])
            terms = {}
            for term in document["terms"]:
                exponent = tuple(int(e) for e in term["exp"])
                terms[exponent] = terms.get(exponent, Fraction(0)) + \
                    Fraction(int(term["num"]), int(term.get("den", 1)))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise InputError(f"Malformed polynomial document: {error}")
        return cls(nvars, terms)


def unipoly_to_json(p):
    """Univariate polynomials share the multivariate document with nvars 1."""
    return MultiPoly(1, {(d,): c for d, c in enumerate(p.coeffs)}).to_json()


def unipoly_from_json(document):
    f = MultiPoly.from_json(document)
    if f.nvars != 1:
        raise VarMismatch(f"Expected a univariate polynomial, got {f.nvars} variables.")
    coeffs = [Fraction(0)] * (f.total_degree + 1)
    for (d,), c in f.terms.items():
        coeffs[d] = c
    return UniPoly(tuple(coeffs))


def _check_same_kind(p, q):
    if isinstance(p, UniPoly) and isinstance(q, UniPoly):
        return
    if isinstance(p, MultiPoly) and isinstance(q, MultiPoly):
        if p.nvars != q.nvars:
            raise VarMismatch(f"Polynomials in {p.nvars} and {q.nvars} variables.")
        return
    raise VarMismatch(f"Cannot combine {type(p).__name__} with {type(q).__name__}.")


def add(p, q):
    """Sum of two polynomials of the same kind."""
    _check_same_kind(p, q)

    if isinstance(p, UniPoly):
        length = max(len(p.coeffs), len(q.coeffs))
        return UniPoly(tuple(p.coefficient(d) + q.coefficient(d) for d in range(length)))

    terms = dict(p.terms)
    for exponent, coeff in q.terms.items():
        terms[exponent] = terms.get(exponent, Fraction(0)) + coeff
    return MultiPoly(p.nvars, terms)


def mul(p, q):
    """Product of two polynomials of the same kind."""
    _check_same_kind(p, q)

    if isinstance(p, UniPoly):
        if p.is_zero() or q.is_zero():
            return UniPoly()
        coeffs = [Fraction(0)] * (p.degree + q.degree + 1)
        for i, a in enumerate(p.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                coeffs[i + j] += a * b
        return UniPoly(tuple(coeffs))

    terms = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exponent = tuple(a + b for a, b in zip(e1, e2))
            terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
    return MultiPoly(p.nvars, terms)


def embed(u, var, nvars):
    """
    Embed a univariate polynomial u(x) as u(t_var) in nvars variables.

    Parameters
    ----------
    u : UniPoly
        The polynomial.
    var : integer
        0-based index of the target variable.
    nvars : integer
        Number of variables of the result.

    Returns
    -------
    f : MultiPoly
        The embedded polynomial.

    """
    if not 0 <= var < nvars:
        raise VarMismatch(f"Variable {var} is out of range for {nvars} variables.")

    terms = {}
    for d, c in enumerate(u.coeffs):
        if c != 0:
            terms[tuple(d if i == var else 0 for i in range(nvars))] = c
    return MultiPoly(nvars, terms)


def interpolate(points):
    """
    Unique polynomial of degree < len(points) through the given points,
    built from the Lagrange basis with exact arithmetic.

    Parameters
    ----------
    points : list of (integer, rational)
        Nodes x with values y. The x values must be distinct.

    Returns
    -------
    p : UniPoly
        The interpolating polynomial.

    """
    points = [(_rat(x), _rat(y)) for x, y in points]

    if not points:
        raise InputError("Interpolation needs at least one point.")

    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode(f"Interpolation nodes are not distinct: {[str(x) for x in xs]}.")

    result = UniPoly()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue

        # Basis polynomial vanishing on every other node
        basis = UniPoly.constant(1)
        denominator = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly((-xj, 1))
                denominator *= xi - xj

        result = result + basis.scale(yi / denominator)

    return result


def evaluate(p, point):
    """
    Exact value of a polynomial. point is a number for UniPoly and a
    sequence of nvars numbers for MultiPoly.
    """
    if isinstance(p, UniPoly):
        if isinstance(point, (list, tuple)):
            if len(point) != 1:
                raise VarMismatch(f"A univariate polynomial takes one value, got {len(point)}.")
            point = point[0]
        x = _rat(point)

        # Horner
        value = Fraction(0)
        for c in reversed(p.coeffs):
            value = value * x + c
        return value

    point = [_rat(v) for v in point]
    if len(point) != p.nvars:
        raise VarMismatch(f"Expected {p.nvars} values, got {len(point)}.")

    value = Fraction(0)
    for exponent, coeff in p.terms.items():
        term = coeff
        for v, e in zip(point, exponent):
            if e:
                term *= v ** e
        value += term
    return value


def specialize_dilation(f, c):
    """
    Univariate specialization g(n) = f(c_1 n, ..., c_r n).

    Parameters
    ----------
    f : MultiPoly
        The polynomial.
    c : list of integers
        Nonnegative dilation vector of length f.nvars.

    Returns
    -------
    g : UniPoly
        The specialization.

    """
    c = [int(v) for v in c]

    if len(c) != f.nvars:
        raise VarMismatch(f"Dilation vector has {len(c)} entries for {f.nvars} variables.")
    if any(v < 0 for v in c):
        raise NegativeDilationVector(f"Dilation vector {c} has a negative entry.")

    coeffs = [Fraction(0)] * (max(f.total_degree, 0) + 1)
    for exponent, coeff in f.terms.items():
        weight = Fraction(1)
        for v, e in zip(c, exponent):
            weight *= v ** e
        coeffs[sum(exponent)] += coeff * weight

    return UniPoly(tuple(coeffs))


def shift(p, offset):
    """The polynomial x -> p(x + offset)."""
    result = UniPoly()
    linear = UniPoly((offset, 1))
    for c in reversed(p.coeffs):
        result = result * linear + UniPoly.constant(c)
    return result


def substitute_variables(f, targets, nvars):
    """
    Rename the variables of f: variable i becomes variable targets[i] of an
    nvars-variable polynomial, or is set to 0 when targets[i] is None.
    """
    if len(targets) != f.nvars:
        raise VarMismatch(f"Expected {f.nvars} targets, got {len(targets)}.")

    terms = {}
    for exponent, coeff in f.terms.items():
        # Monomials containing a zeroed variable vanish
        if any(e > 0 and targets[i] is None for i, e in enumerate(exponent)):
            continue
        new = [0] * nvars
        for i, e in enumerate(exponent):
            if e:
                new[targets[i]] += e
        new = tuple(new)
        terms[new] = terms.get(new, Fraction(0)) + coeff

    return MultiPoly(nvars, terms)


def is_coefficient_nonnegative(p):
    """
    Check that every stored coefficient is nonnegative.

    Parameters
    ----------
    p : UniPoly or MultiPoly
        The polynomial.

    Returns
    -------
    nonnegative : bool
        True iff no coefficient is negative.
    offenders : dict
        Negative coefficients, keyed by degree (UniPoly) or exponent tuple
        (MultiPoly).

    """
    if isinstance(p, UniPoly):
        offenders = {d: c for d, c in enumerate(p.coeffs) if c < 0}
    else:
        offenders = {e: c for e, c in p.terms.items() if c < 0}

    return not offenders, offenders
