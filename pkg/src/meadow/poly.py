"""Canonical sparse multivariate polynomials with rational coefficients.

A :class:`Polynomial` maps monomials to nonzero :class:`~fractions.Fraction`
coefficients.  A monomial is a tuple of ``(variable, exponent)`` pairs sorted by
variable name, with only positive exponents; ``()`` is the constant monomial.
Because the representation is canonical, ``==`` on polynomials is equality of
polynomial functions over the rationals.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction

from .errors import Multivariate, NotAPolynomial, UnboundVariable, ZeroPolynomial
from .numerics import q0_inv
from .term import (
    ONE,
    ZERO,
    Add,
    Inv,
    Mul,
    Neg,
    One,
    Path,
    Term,
    Var,
    Zero,
    format_path,
    numeral,
)

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial, order: list[str]) -> tuple:
    exps = dict(m)
    return (_mono_degree(m), tuple(exps.get(v, 0) for v in order))


_UNIT = {(): Fraction(1)}


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            acc[m] = acc.get(m, Fraction(0)) + c
        self._terms = {m: Fraction(c) for m, c in acc.items() if c != 0}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> Polynomial:
        # trusted: Fraction coefficients, zeros not yet dropped
        p = cls.__new__(cls)
        p._terms = {m: c for m, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int | Fraction) -> Polynomial:
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        return cls({((name, 1),): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> frozenset[str]:
        return frozenset(v for m in self._terms for v, _ in m)

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return Polynomial._raw(out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self._terms == _UNIT:
            return other
        if other._terms == _UNIT:
            return self
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return Polynomial._raw(out)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order (variables in lexicographic order)."""
        order = sorted(self.variables())
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0], order), reverse=True)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            value = c
            for v, e in m:
                try:
                    value *= assignment[v] ** e
                except KeyError:
                    raise UnboundVariable(v) from None
            total += value
        return total

    def univariate_coefficients(self) -> tuple[str | None, list[Fraction]]:
        """``(variable, [c0, c1, ..., cn])`` for a polynomial in at most one variable."""
        vs = self.variables()
        if len(vs) > 1:
            raise Multivariate(f"polynomial {self} has variables {', '.join(sorted(vs))}")
        var = next(iter(vs), None)
        coeffs = [Fraction(0)] * (self.degree() + 1)
        for m, c in self._terms.items():
            coeffs[_mono_degree(m)] = c
        return var, coeffs

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = " * ".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            mag = abs(c)
            if not mono:
                body = _fmt(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt(mag)} * {mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO_POLY = Polynomial()
ONE_POLY = Polynomial.constant(1)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_eval(p: Polynomial, assignment: Mapping[str, Fraction]) -> Fraction:
    return p.evaluate(assignment)


def poly_from_term(t: Term, _path: Path = ()) -> Polynomial:
    """Expand a plain-meadow term whose inverses are all applied to constants."""
    match t:
        case Zero():
            return ZERO_POLY
        case One():
            return ONE_POLY
        case Var(name):
            return Polynomial.variable(name)
        case Add(a, b):
            return poly_from_term(a, _path + (0,)) + poly_from_term(b, _path + (1,))
        case Mul(a, b):
            return poly_from_term(a, _path + (0,)) * poly_from_term(b, _path + (1,))
        case Neg(a):
            return -poly_from_term(a, _path + (0,))
        case Inv(a):
            # the inverse of a constant is a constant; anything else is a genuine division
            try:
                inner = poly_from_term(a, _path + (0,))
            except NotAPolynomial:
                inner = None
            if inner is not None and inner.is_constant():
                return Polynomial.constant(q0_inv(inner.constant_value()))
    raise NotAPolynomial(f"{type(t).__name__} node at {format_path(_path)} is not polynomial", _path)


def _rational_term(q: Fraction) -> Term:
    t = numeral(abs(q.numerator))
    if q.denominator != 1:
        t = Mul(t, Inv(numeral(q.denominator)))
    return Neg(t) if q < 0 else t


def poly_to_term(p: Polynomial) -> Term:
    """A plain-meadow term denoting ``p`` (numerals for coefficients, ``c^-1`` for denominators)."""
    out: Term | None = None
    for m, c in p.sorted_terms():
        mono: Term | None = None
        for v, e in m:
            for _ in range(e):
                mono = Var(v) if mono is None else Mul(mono, Var(v))
        if mono is None:
            piece = _rational_term(c)
        elif c == 1:
            piece = mono
        elif c == -1:
            piece = Neg(mono)
        else:
            piece = Mul(_rational_term(c), mono)
        out = piece if out is None else Add(out, piece)
    return ZERO if out is None else out


def _divisors(n: int) -> list[int]:
    from sympy import divisors

    return [int(d) for d in divisors(abs(n))]


def rational_roots(p: Polynomial) -> frozenset[Fraction]:
    """The exact set of rational zeros of a nonzero polynomial in at most one variable.

    Denominators are cleared to a primitive integer polynomial, ``x^k`` is
    factored out, and every candidate ``±a/b`` with ``a`` dividing the trailing
    and ``b`` the leading coefficient is tested exactly.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    _, coeffs = p.univariate_coefficients()
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = math.gcd(*ints)
    ints = [c // content for c in ints]

    roots: set[Fraction] = set()
    k = 0
    while ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    ints = ints[k:]
    if len(ints) == 1:
        return frozenset(roots)

    def value(num: int, den: int) -> int:
        n = len(ints) - 1
        return sum(c * num**i * den ** (n - i) for i, c in enumerate(ints))

    f_one, f_minus_one = sum(ints), value(-1, 1)
    for b in _divisors(ints[-1]):
        for a in _divisors(ints[0]):
            if math.gcd(a, b) != 1:
                continue
            for num in (a, -a):
                # cheap necessary conditions: (num - b) | f(1), (num + b) | f(-1)
                if num != b and f_one % (num - b):
                    continue
                if num != -b and f_minus_one % (num + b):
                    continue
                if value(num, b) == 0:
                    roots.add(Fraction(num, b))
    return frozenset(roots)
