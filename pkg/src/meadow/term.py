"""Terms over the signature (0, 1, +, *, -, ^-1, s, floor, ceil) with variables.

Terms are immutable dataclasses; structural equality is syntactic identity.
Subtraction, division, numerals, integer powers and the pseudo units/zeros are
sugar that expands into these ten constructors.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import ClassVar

from .errors import InvalidPath, UnboundVariable
from .numerics import Q0, Model, Scalar

Path = tuple[int, ...]


class Term:
    __slots__ = ()
    arity: ClassVar[int] = 0

    @property
    def children(self) -> tuple[Term, ...]:
        return ()

    def with_children(self, children: Sequence[Term]) -> Term:
        return self

    def __str__(self) -> str:
        from .syntax import print_term

        return print_term(self)


@dataclass(frozen=True, slots=True)
class Zero(Term):
    def __repr__(self) -> str:
        return "Zero"


@dataclass(frozen=True, slots=True)
class One(Term):
    def __repr__(self) -> str:
        return "One"


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("variable names must be nonempty")

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, slots=True)
class _Unary(Term):
    arg: Term
    arity: ClassVar[int] = 1

    @property
    def children(self) -> tuple[Term, ...]:
        return (self.arg,)

    def with_children(self, children: Sequence[Term]) -> Term:
        (arg,) = children
        return type(self)(arg)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.arg!r})"


@dataclass(frozen=True, slots=True)
class _Binary(Term):
    left: Term
    right: Term
    arity: ClassVar[int] = 2

    @property
    def children(self) -> tuple[Term, ...]:
        return (self.left, self.right)

    def with_children(self, children: Sequence[Term]) -> Term:
        left, right = children
        return type(self)(left, right)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"


class Add(_Binary):
    __slots__ = ()


class Mul(_Binary):
    __slots__ = ()


class Neg(_Unary):
    __slots__ = ()


class Inv(_Unary):
    __slots__ = ()


class Sign(_Unary):
    __slots__ = ()


class Floor(_Unary):
    __slots__ = ()


class Ceil(_Unary):
    __slots__ = ()


ZERO = Zero()
ONE = One()

#: constructors outside the plain meadow signature
EXTENDED = (Sign, Floor, Ceil)


def numeral(n: int) -> Term:
    """0, 1+1+...+1 nested to the left, or the negation of a positive numeral."""
    if n == 0:
        return ZERO
    if n < 0:
        return Neg(numeral(-n))
    t: Term = ONE
    for _ in range(n - 1):
        t = Add(t, ONE)
    return t


def numeral_value(t: Term) -> int | None:
    """Inverse of :func:`numeral` for non-negative numerals, else ``None``."""
    if isinstance(t, Zero):
        return 0
    n = 0
    while isinstance(t, Add) and isinstance(t.right, One):
        n += 1
        t = t.left
    if isinstance(t, One):
        return n + 1
    return None


def pseudo_unit(t: Term) -> Term:
    return Mul(t, Inv(t))


def pseudo_zero(t: Term) -> Term:
    return Add(ONE, Neg(pseudo_unit(t)))


def sub(a: Term, b: Term) -> Term:
    return Add(a, Neg(b))


def div(a: Term, b: Term) -> Term:
    return Mul(a, Inv(b))


def max_term(a: Term, b: Term) -> Term:
    """``max(a, b) = max(a - b, 0) + b`` with ``max(d, 0) = (s(d) + 1) * d / 2``."""
    d = sub(a, b)
    return Add(div(Mul(Add(Sign(d), ONE), d), numeral(2)), b)


def min_term(a: Term, b: Term) -> Term:
    return Neg(max_term(Neg(a), Neg(b)))


def power(t: Term, k: int) -> Term:
    """``t^k`` for a constant integer exponent, as repeated products of ``t``
    (or of ``t^-1`` when ``k`` is negative)."""
    if k == 0:
        return ONE
    base = t if k > 0 else Inv(t)
    out = base
    for _ in range(abs(k) - 1):
        out = Mul(out, base)
    return out


def subterms(t: Term) -> Iterator[tuple[Path, Term]]:
    """All ``(path, subterm)`` pairs in pre-order."""
    stack: list[tuple[Path, Term]] = [((), t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((path + (i,), kids[i]))


def variables(t: Term) -> frozenset[str]:
    return frozenset(node.name for _, node in subterms(t) if isinstance(node, Var))


def size(t: Term) -> int:
    return sum(1 for _ in subterms(t))


def is_sigma_m(t: Term) -> bool:
    return not any(isinstance(node, EXTENDED) for _, node in subterms(t))


def substitute(t: Term, sigma: Mapping[str, Term]) -> Term:
    """Simultaneous replacement of variables (there are no binders)."""
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    kids = t.children
    if not kids:
        return t
    new = tuple(substitute(k, sigma) for k in kids)
    if all(a is b for a, b in zip(new, kids)):
        return t
    return t.with_children(new)


def subterm_at(t: Term, path: Sequence[int]) -> Term:
    node = t
    for depth, i in enumerate(path):
        kids = node.children
        if not 0 <= i < len(kids):
            raise InvalidPath(f"path {format_path(path)} leaves the term at depth {depth}")
        node = kids[i]
    return node


def replace_at(t: Term, path: Sequence[int], replacement: Term) -> Term:
    if not path:
        return replacement
    i, rest = path[0], path[1:]
    kids = t.children
    if not 0 <= i < len(kids):
        raise InvalidPath(f"path {format_path(path)} leaves the term")
    new = list(kids)
    new[i] = replace_at(kids[i], rest, replacement)
    return t.with_children(new)


def format_path(path: Sequence[int]) -> str:
    return ".".join(map(str, path)) if path else "root"


def evaluate(t: Term, model: Model = Q0, assignment: Mapping[str, Scalar] | None = None) -> Scalar:
    """Homomorphic evaluation of ``t`` in ``model``.

    Raises UnboundVariable for a variable missing from ``assignment`` and
    UnsupportedSymbol for sign/floor/ceil under a model that lacks them.
    """
    env = assignment or {}
    match t:
        case Zero():
            return model.zero()
        case One():
            return model.one()
        case Var(name):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(name) from None
        case Add(a, b):
            return evaluate(a, model, env) + evaluate(b, model, env)
        case Mul(a, b):
            return evaluate(a, model, env) * evaluate(b, model, env)
        case Neg(a):
            return -evaluate(a, model, env)
        case Inv(a):
            return model.inv(evaluate(a, model, env))
        case Sign(a):
            return model.sign(evaluate(a, model, env))
        case Floor(a):
            return model.floor(evaluate(a, model, env))
        case Ceil(a):
            return model.ceiling(evaluate(a, model, env))
    raise TypeError(f"not a term: {t!r}")
