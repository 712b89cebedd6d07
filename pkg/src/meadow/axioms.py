"""The axiom tables: meadow axioms (md.*), sign axioms (signs.*) and floor/ceiling axioms (fc.*).

Names are numbered top to bottom in table order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import parse
from .term import Term, variables


@dataclass(frozen=True)
class Rule:
    """An equation usable as a rewrite rule in either direction."""

    name: str
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> frozenset[str]:
        return variables(self.lhs) | variables(self.rhs)

    def __str__(self) -> str:
        return f"{self.name}: {self.lhs} = {self.rhs}"


_TABLE = [
    # meadows
    ("md.1", "(x + y) + z", "x + (y + z)"),
    ("md.2", "x + y", "y + x"),
    ("md.3", "x + 0", "x"),
    ("md.4", "x + -x", "0"),
    ("md.5", "(x * y) * z", "x * (y * z)"),
    ("md.6", "x * y", "y * x"),
    ("md.7", "1 * x", "x"),
    ("md.8", "x * (y + z)", "x * y + x * z"),
    ("md.9", "(x^-1)^-1", "x"),
    ("md.10", "x * (x * x^-1)", "x"),
    # sign
    ("signs.1", "s(one(x))", "one(x)"),
    ("signs.2", "s(zero(x))", "zero(x)"),
    ("signs.3", "s(-1)", "-1"),
    ("signs.4", "s(x^-1)", "s(x)"),
    ("signs.5", "s(x * y)", "s(x) * s(y)"),
    ("signs.6", "zero(s(x) - s(y)) * (s(x + y) - s(x))", "0"),
    # floor and ceiling
    ("fc.1", "one(x) * floor(y)", "one(x) * floor(one(x) * y)"),
    ("fc.2", "zero(x) * floor(y)", "zero(x) * floor(zero(x) * y)"),
    ("fc.3", "floor(x - 1)", "floor(x) - 1"),
    ("fc.4", "floor(x + 1)", "floor(x) + 1"),
    ("fc.5", "floor(0)", "0"),
    ("fc.6", "(zero(1 - s(x)) * zero(1 - s(1 - x))) * floor(x)", "0"),
    ("fc.7", "ceil(x)", "-floor(-x)"),
]

AXIOMS: dict[str, Rule] = {name: Rule(name, parse(lhs), parse(rhs)) for name, lhs, rhs in _TABLE}

MD = [r for n, r in AXIOMS.items() if n.startswith("md.")]
SIGNS = [r for n, r in AXIOMS.items() if n.startswith("signs.")]
FC = [r for n, r in AXIOMS.items() if n.startswith("fc.")]

#: the Lagrange equation: 1 plus four squares is always invertible in Q0
LAGRANGE = Rule("L", parse("(1 + x^2 + y^2 + z^2 + u^2) / (1 + x^2 + y^2 + z^2 + u^2)"), parse("1"))
