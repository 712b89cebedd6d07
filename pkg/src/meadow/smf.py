"""Standard meadow forms and the normalizer that builds them.

An SMF of level 0 is a ratio ``s/t`` of polynomials.  An SMF of level n+1 is
``0_g * P + 1_g * Q`` for a polynomial guard ``g``; its value is that of ``P``
wherever ``g`` vanishes and that of ``Q`` elsewhere.  The combinators follow the
inductive construction literally: no cancellation and no pruning of branches.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import NotSigmaM, SizeBudgetExceeded
from .numerics import q0_inv
from .poly import ONE_POLY, ZERO_POLY, Polynomial, poly_to_term
from .term import (
    EXTENDED,
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
    pseudo_unit,
    pseudo_zero,
)

DEFAULT_SIZE_CAP = 10**6


@dataclass(frozen=True)
class Ratio:
    num: Polynomial
    den: Polynomial

    level = 0
    size = 1


@dataclass(frozen=True)
class Split:
    guard: Polynomial
    on_zero: SMF
    on_unit: SMF
    level: int = field(init=False, compare=False, repr=False)
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "level", 1 + max(self.on_zero.level, self.on_unit.level))
        object.__setattr__(self, "size", 1 + self.on_zero.size + self.on_unit.size)


SMF = Union[Ratio, Split]


class _Budget:
    """Counts SMF nodes allocated by the combinators."""

    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def charge(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.cap:
            raise SizeBudgetExceeded(f"SMF construction exceeded the cap of {self.cap} nodes")


def _charge(budget: _Budget | None) -> None:
    if budget is not None:
        budget.charge()


def _ratio(num: Polynomial, den: Polynomial, budget: _Budget | None) -> Ratio:
    _charge(budget)
    return Ratio(num, den)


def _split(guard: Polynomial, on_zero: SMF, on_unit: SMF, budget: _Budget | None) -> Split:
    _charge(budget)
    return Split(guard, on_zero, on_unit)


def smf_add(p: SMF, q: SMF, budget: _Budget | None = None) -> SMF:
    if isinstance(p, Split):
        return _split(p.guard, smf_add(p.on_zero, q, budget), smf_add(p.on_unit, q, budget), budget)
    if isinstance(q, Split):
        return _split(q.guard, smf_add(p, q.on_zero, budget), smf_add(p, q.on_unit, budget), budget)
    s, t, u, v = p.num, p.den, q.num, q.den
    # t = 0: p vanishes; v = 0: q vanishes; otherwise the common-denominator sum
    summed = _ratio(s * v + t * u, t * v, budget)
    return _split(t, q, _split(v, p, summed, budget), budget)


def smf_mul(p: SMF, q: SMF, budget: _Budget | None = None) -> SMF:
    if isinstance(p, Split):
        return _split(p.guard, smf_mul(p.on_zero, q, budget), smf_mul(p.on_unit, q, budget), budget)
    if isinstance(q, Split):
        return _split(q.guard, smf_mul(p, q.on_zero, budget), smf_mul(p, q.on_unit, budget), budget)
    return _ratio(p.num * q.num, p.den * q.den, budget)


def smf_neg(p: SMF, budget: _Budget | None = None) -> SMF:
    if isinstance(p, Split):
        return _split(p.guard, smf_neg(p.on_zero, budget), smf_neg(p.on_unit, budget), budget)
    return _ratio(-p.num, p.den, budget)


def smf_inv(p: SMF, budget: _Budget | None = None) -> SMF:
    if isinstance(p, Split):
        return _split(p.guard, smf_inv(p.on_zero, budget), smf_inv(p.on_unit, budget), budget)
    return _ratio(p.den, p.num, budget)


def normalize(t: Term, size_cap: int = DEFAULT_SIZE_CAP) -> SMF:
    """Build an SMF denoting the plain-meadow term ``t`` by structural induction.

    Raises NotSigmaM when ``t`` contains sign, floor or ceiling, and
    SizeBudgetExceeded once more than ``size_cap`` SMF nodes have been built.
    """
    budget = _Budget(size_cap)
    memo: dict[Term, SMF] = {}

    def go(node: Term, path: Path) -> SMF:
        if node in memo:
            return memo[node]
        match node:
            case Zero():
                out: SMF = Ratio(ZERO_POLY, ONE_POLY)
            case One():
                out = Ratio(ONE_POLY, ONE_POLY)
            case Var(name):
                out = Ratio(Polynomial.variable(name), ONE_POLY)
            case Add(a, b):
                out = smf_add(go(a, path + (0,)), go(b, path + (1,)), budget)
            case Mul(a, b):
                out = smf_mul(go(a, path + (0,)), go(b, path + (1,)), budget)
            case Neg(a):
                out = smf_neg(go(a, path + (0,)), budget)
            case Inv(a):
                out = smf_inv(go(a, path + (0,)), budget)
            case _ if isinstance(node, EXTENDED):
                raise NotSigmaM(
                    f"{type(node).__name__} at {format_path(path)} is outside the plain meadow signature", path
                )
            case _:
                raise TypeError(f"not a term: {node!r}")
        memo[node] = out
        return out

    return go(t, ())


def smf_eval(p: SMF, assignment: Mapping[str, Fraction]) -> Fraction:
    """Value in Q0: follow guards (zero branch where the guard vanishes)."""
    while isinstance(p, Split):
        p = p.on_zero if p.guard.evaluate(assignment) == 0 else p.on_unit
    return p.num.evaluate(assignment) * q0_inv(p.den.evaluate(assignment))


def smf_variables(p: SMF) -> frozenset[str]:
    out: set[str] = set()
    stack = [p]
    while stack:
        node = stack.pop()
        if isinstance(node, Split):
            out |= node.guard.variables()
            stack.extend((node.on_zero, node.on_unit))
        else:
            out |= node.num.variables() | node.den.variables()
    return frozenset(out)


def polynomials(p: SMF) -> list[Polynomial]:
    """Every guard, numerator and denominator, in pre-order."""
    out = []
    stack = [p]
    while stack:
        node = stack.pop()
        if isinstance(node, Split):
            out.append(node.guard)
            stack.extend((node.on_unit, node.on_zero))
        else:
            out.extend((node.num, node.den))
    return out


def is_well_formed(p: object) -> bool:
    """True when ``p`` is built only from Ratio/Split nodes over polynomials,
    with consistent cached level and size."""
    if isinstance(p, Ratio):
        return isinstance(p.num, Polynomial) and isinstance(p.den, Polynomial)
    if isinstance(p, Split):
        return (
            isinstance(p.guard, Polynomial)
            and is_well_formed(p.on_zero)
            and is_well_formed(p.on_unit)
            and p.level == 1 + max(p.on_zero.level, p.on_unit.level)
            and p.size == 1 + p.on_zero.size + p.on_unit.size
        )
    return False


def render(p: SMF) -> str:
    if isinstance(p, Split):
        return f"[{p.guard} == 0 ? {render(p.on_zero)} : {render(p.on_unit)}]"
    return f"({p.num})/({p.den})"


def smf_to_term(p: SMF) -> Term:
    """The SMF read back as a plain-meadow term ``s/t`` or ``0_g*P + 1_g*Q``."""
    if isinstance(p, Split):
        g = poly_to_term(p.guard)
        return Add(Mul(pseudo_zero(g), smf_to_term(p.on_zero)), Mul(pseudo_unit(g), smf_to_term(p.on_unit)))
    return Mul(poly_to_term(p.num), Inv(poly_to_term(p.den)))
