"""Equivalence of terms over the rationals.

Two procedures live here:

* :func:`equiv_random` samples assignments and evaluates both sides exactly.
  A counterexample is definitive; the absence of one is only evidence.
* :func:`equiv_univariate_exact` decides agreement of one-variable plain-meadow
  terms.  It normalizes the difference to an SMF and computes its zero set,
  which is always either finite or cofinite; so two such terms either agree
  at only finitely many rationals, or disagree at only finitely many.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import Multivariate, NotSigmaM
from .numerics import Q0, Model, Scalar, format_rational
from .poly import Polynomial, rational_roots
from .smf import DEFAULT_SIZE_CAP, SMF, Split, normalize, smf_eval, smf_variables
from .term import EXTENDED, Add, Neg, Term, evaluate, format_path, subterms, variables

DEFAULT_SAMPLES = 200
DEFAULT_BOUND = 100
DEFAULT_SEED = 0

# values tried for every variable before uniform sampling starts
_SPECIAL = (0, 1, -1)


@dataclass(frozen=True)
class SampleConfig:
    samples: int = DEFAULT_SAMPLES
    bound: int = DEFAULT_BOUND
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("sample count must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")


@dataclass(frozen=True)
class CounterexampleFound:
    assignment: dict[str, Scalar]
    lhs: Scalar
    rhs: Scalar
    model: Model = Q0

    def record(self) -> str:
        binds = " ".join(f"{v}={_fmt(self.model, a)}" for v, a in sorted(self.assignment.items()))
        body = f"{binds} " if binds else ""
        return f"NOT-EQUIV {body}lhs={_fmt(self.model, self.lhs)} rhs={_fmt(self.model, self.rhs)}"


@dataclass(frozen=True)
class NoCounterexample:
    samples: int

    def record(self) -> str:
        return f"EQUIV-SAMPLED n={self.samples}"


RandomVerdict = Union[CounterexampleFound, NoCounterexample]


def _fmt(model: Model, a: Scalar) -> str:
    if model.modulus is None:
        return format_rational(a)
    return str(a.residue)


def sample_assignments(names: list[str], cfg: SampleConfig, model: Model = Q0) -> Iterator[dict[str, Scalar]]:
    """``cfg.samples`` assignments: first the corners drawn from {0, 1, -1}
    (at most half the budget), then uniform draws from the seeded generator."""
    rng = random.Random(cfg.seed)
    produced = 0
    corner_budget = cfg.samples // 2 if names else 0
    specials = list(dict.fromkeys(model.scalar(v) for v in _SPECIAL))
    for combo in itertools.islice(itertools.product(specials, repeat=len(names)), corner_budget):
        yield dict(zip(names, combo))
        produced += 1
    while produced < cfg.samples:
        yield {v: model.random_scalar(rng, cfg.bound) for v in names}
        produced += 1


def equiv_random(r: Term, s: Term, cfg: SampleConfig = SampleConfig(), model: Model = Q0) -> RandomVerdict:
    names = sorted(variables(r) | variables(s))
    for a in sample_assignments(names, cfg, model):
        lv, rv = evaluate(r, model, a), evaluate(s, model, a)
        if lv != rv:
            return CounterexampleFound(a, lv, rv, model)
    return NoCounterexample(cfg.samples)


@dataclass(frozen=True)
class FiniteZeros:
    zeros: frozenset[Fraction]

    def __contains__(self, q: Fraction) -> bool:
        return q in self.zeros


@dataclass(frozen=True)
class CofiniteZeros:
    exceptions: frozenset[Fraction]

    def __contains__(self, q: Fraction) -> bool:
        return q not in self.exceptions


ZeroSetDescription = Union[FiniteZeros, CofiniteZeros]


def _union(a: ZeroSetDescription, b: ZeroSetDescription) -> ZeroSetDescription:
    match a, b:
        case FiniteZeros(x), FiniteZeros(y):
            return FiniteZeros(x | y)
        case CofiniteZeros(x), FiniteZeros(y):
            return CofiniteZeros(x - y)
        case FiniteZeros(x), CofiniteZeros(y):
            return CofiniteZeros(y - x)
        case CofiniteZeros(x), CofiniteZeros(y):
            return CofiniteZeros(x & y)
    raise TypeError


def _minus_finite(z: ZeroSetDescription, points: frozenset[Fraction]) -> ZeroSetDescription:
    if isinstance(z, FiniteZeros):
        return FiniteZeros(z.zeros - points)
    return CofiniteZeros(z.exceptions | points)


def zero_set(p: SMF) -> ZeroSetDescription:
    """Exact set of rationals at which a one-variable SMF evaluates to 0."""
    vs = smf_variables(p)
    if len(vs) > 1:
        raise Multivariate(f"zero sets are only computed for one variable, got {', '.join(sorted(vs))}")
    var = next(iter(vs), None)
    return _zeros(p, var, {}, {})


def _zeros(
    p: SMF, var: str | None, seen: dict[int, ZeroSetDescription], roots: dict[Polynomial, frozenset[Fraction]]
) -> ZeroSetDescription:
    # the combinators share subforms, so memoize on node identity
    if id(p) in seen:
        return seen[id(p)]

    def roots_of(q: Polynomial) -> frozenset[Fraction]:
        if q not in roots:
            roots[q] = rational_roots(q)
        return roots[q]

    if isinstance(p, Split):
        if p.guard.is_zero():
            out = _zeros(p.on_zero, var, seen, roots)
        else:
            # the on_zero branch only matters at the finitely many roots of the guard
            g = roots_of(p.guard)
            hits = frozenset(q for q in g if smf_eval(p.on_zero, {var: q}) == 0)
            out = _union(_minus_finite(_zeros(p.on_unit, var, seen, roots), g), FiniteZeros(hits))
    # s * t^-1 is zero exactly where s or t is
    elif p.num.is_zero() or p.den.is_zero():
        out = CofiniteZeros(frozenset())
    else:
        out = FiniteZeros(roots_of(p.num) | roots_of(p.den))
    seen[id(p)] = out
    return out


@dataclass(frozen=True)
class AgreeAlmostEverywhere:
    differences: frozenset[Fraction]

    def record(self) -> str:
        return f"AGREE-AE except={format_set(self.differences)}"


@dataclass(frozen=True)
class AgreeOnlyFinitely:
    agreements: frozenset[Fraction]

    def record(self) -> str:
        return f"AGREE-FIN agree={format_set(self.agreements)}"


AEVerdict = Union[AgreeAlmostEverywhere, AgreeOnlyFinitely]


def format_set(points: frozenset[Fraction]) -> str:
    return "{" + ",".join(format_rational(q) for q in sorted(points)) + "}"


def _require_sigma_m(t: Term) -> None:
    for path, node in subterms(t):
        if isinstance(node, EXTENDED):
            raise NotSigmaM(f"{type(node).__name__} at {format_path(path)}: exact equivalence covers only + * - ^-1", path)


def equiv_univariate_exact(r: Term, s: Term, size_cap: int = DEFAULT_SIZE_CAP) -> AEVerdict:
    """Decide how two one-variable plain-meadow terms agree over the rationals.

    Every reported point is confirmed by evaluating both sides exactly.
    """
    _require_sigma_m(r)
    _require_sigma_m(s)
    names = sorted(variables(r) | variables(s))
    if len(names) > 1:
        raise Multivariate(f"exact equivalence needs at most one variable, got {', '.join(names)}")
    zs = zero_set(normalize(Add(r, Neg(s)), size_cap))

    def differs(q: Fraction) -> bool:
        a: Mapping[str, Fraction] = {names[0]: q} if names else {}
        return evaluate(r, Q0, a) != evaluate(s, Q0, a)

    if isinstance(zs, CofiniteZeros):
        return AgreeAlmostEverywhere(frozenset(q for q in zs.exceptions if differs(q)))
    return AgreeOnlyFinitely(frozenset(q for q in zs.zeros if not differs(q)))
