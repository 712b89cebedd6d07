"""Seeded random terms, used by the samplers, the self-checks and the test suite."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .term import ONE, ZERO, Add, Ceil, Floor, Inv, Mul, Neg, Sign, Term, Var

_UNARY_PLAIN = (Neg, Inv)
_UNARY_EXTENDED = (Neg, Inv, Sign, Floor, Ceil)
_BINARY = (Add, Mul)


def random_term(rng: random.Random, size: int, names: Sequence[str], extended: bool = False) -> Term:
    """A term with exactly ``size`` nodes over the variables ``names``.

    With ``extended`` the unary symbols s, floor and ceil are also drawn.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    unary = _UNARY_EXTENDED if extended else _UNARY_PLAIN
    return _build(rng, size, list(names), unary)


def _build(rng: random.Random, size: int, names: list[str], unary: tuple) -> Term:
    if size == 1:
        pick = rng.randrange(len(names) + 2) if names else rng.randrange(2)
        if pick == 0:
            return ZERO
        if pick == 1:
            return ONE
        return Var(names[pick - 2])
    if size == 2 or rng.random() < 0.3:
        return rng.choice(unary)(_build(rng, size - 1, names, unary))
    left = rng.randint(1, size - 2)
    op = rng.choice(_BINARY)
    return op(_build(rng, left, names, unary), _build(rng, size - 1 - left, names, unary))


def random_terms(
    seed: int, count: int, max_size: int, names: Sequence[str], extended: bool = False
) -> list[Term]:
    rng = random.Random(seed)
    return [random_term(rng, rng.randint(1, max_size), names, extended) for _ in range(count)]
