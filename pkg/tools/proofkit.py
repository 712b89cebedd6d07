"""Authoring helpers for the recorded proof corpus.

The kernel only replays explicit steps.  This module finds those steps while a
proof is being written: the author lists the intermediate terms of a derivation
and each gap is filled either by one rule application (located by matching both
neighbouring terms against the rule) or by an associativity/commutativity
rearrangement.  The output is plain proof text that the kernel checks on its own.
"""

from __future__ import annotations

from meadow.axioms import Rule
from meadow.proofs import LR, RL, Proof, ProofStep, Registry, apply_step, instantiate
from meadow.syntax import parse, print_term
from meadow.term import Add, Mul, Term, Var, subterm_at

AC_RULES = {Add: ("md.1", "md.2"), Mul: ("md.5", "md.6")}


def match(pattern: Term, term: Term, sigma: dict[str, Term]) -> bool:
    if isinstance(pattern, Var):
        bound = sigma.get(pattern.name)
        if bound is None:
            sigma[pattern.name] = term
            return True
        return bound == term
    if type(pattern) is not type(term):
        return False
    return all(match(p, t, sigma) for p, t in zip(pattern.children, term.children))


def _descent(a: Term, b: Term) -> list[tuple[int, ...]]:
    """Paths from the root down to the deepest node where a and b still differ in one child only."""
    paths = [()]
    path: tuple[int, ...] = ()
    while type(a) is type(b) and a.children:
        diff = [i for i, (x, y) in enumerate(zip(a.children, b.children)) if x != y]
        if len(diff) != 1:
            break
        i = diff[0]
        path += (i,)
        paths.append(path)
        a, b = a.children[i], b.children[i]
    return paths


def find_step(t: Term, target: Term, registry: Registry, only: list[str] | None = None) -> ProofStep | None:
    names = only if only is not None else registry.names()
    for path in reversed(_descent(t, target)):
        a, b = subterm_at(t, path), subterm_at(target, path)
        for name in names:
            rule: Rule = registry[name]
            for direction, (src, dst) in ((LR, (rule.lhs, rule.rhs)), (RL, (rule.rhs, rule.lhs))):
                sigma: dict[str, Term] = {}
                if match(src, a, sigma) and match(dst, b, sigma):
                    sigma = {k: v for k, v in sigma.items() if Var(k) != v}
                    step = ProofStep(path, name, direction, sigma)
                    if apply_step(t, step, registry) == target:
                        return step
    return None


class Rewriter:
    def __init__(self, term: Term, registry: Registry):
        self.term = term
        self.registry = registry
        self.steps: list[ProofStep] = []

    def apply(self, path, rule, direction, sigma) -> None:
        sigma = {k: v for k, v in sigma.items() if Var(k) != v}
        step = ProofStep(tuple(path), rule, direction, sigma)
        redex, contractum = instantiate(self.registry[rule], direction, sigma)
        assert redex != contractum, f"no-op step {step}"
        self.term = apply_step(self.term, step, self.registry)
        self.steps.append(step)

    def at(self, path) -> Term:
        return subterm_at(self.term, path)

    def canon(self, path=()) -> None:
        node = self.at(path)
        op = type(node)
        if op in AC_RULES:
            for leaf in self._leaves(path, op):
                self.canon(leaf)
            self._right_assoc(path, op)
            self._sort(path, op)
        else:
            for i in range(len(node.children)):
                self.canon(path + (i,))

    def _leaves(self, path, op):
        node = self.at(path)
        if type(node) is not op:
            return [path]
        return self._leaves(path + (0,), op) + self._leaves(path + (1,), op)

    def _right_assoc(self, path, op) -> None:
        assoc, _ = AC_RULES[op]
        while True:
            node = self.at(path)
            if type(node) is not op:
                return
            while type(node.left) is op:
                self.apply(path, assoc, LR, {"x": node.left.left, "y": node.left.right, "z": node.right})
                node = self.at(path)
            path = path + (1,)

    def _sort(self, path, op) -> None:
        assoc, comm = AC_RULES[op]
        n = len(self._leaves(path, op))
        for _ in range(n):
            swapped = False
            for i in range(n - 1):
                spine = path + (1,) * i
                node = self.at(spine)
                first = node.left
                rest = node.right
                last_pair = i == n - 2
                second = rest if last_pair else rest.left
                if _key(first) <= _key(second):
                    continue
                swapped = True
                if last_pair:
                    self.apply(spine, comm, LR, {"x": first, "y": second})
                else:
                    self.apply(spine, assoc, RL, {"x": first, "y": second, "z": rest.right})
                    self.apply(spine + (0,), comm, LR, {"x": first, "y": second})
                    self.apply(spine, assoc, LR, {"x": second, "y": first, "z": rest.right})
            if not swapped:
                return


def _key(t: Term) -> str:
    return repr(t)


def reverse_steps(steps: list[ProofStep]) -> list[ProofStep]:
    return [s.flipped() for s in reversed(steps)]


def ac_steps(t: Term, target: Term, registry: Registry) -> list[ProofStep] | None:
    a, b = Rewriter(t, registry), Rewriter(target, registry)
    a.canon()
    b.canon()
    if a.term != b.term:
        return None
    return a.steps + reverse_steps(b.steps)


class Derivation:
    """A proof under construction: ``lhs``, then a chain of intermediate terms."""

    def __init__(self, name: str, lhs: str | Term, registry: Registry):
        self.name = name
        self.registry = registry
        self.lhs = parse(lhs) if isinstance(lhs, str) else lhs
        self.term = self.lhs
        self.steps: list[ProofStep] = []

    def _push(self, steps: list[ProofStep]) -> None:
        for s in steps:
            self.term = apply_step(self.term, s, self.registry)
            self.steps.append(s)

    def to(self, target: str | Term, via: str | list[str] | None = None) -> Derivation:
        target = parse(target) if isinstance(target, str) else target
        only = [via] if isinstance(via, str) else via
        if target == self.term:
            return self
        step = find_step(self.term, target, self.registry, only)
        if step is not None:
            self._push([step])
            return self
        ac = ac_steps(self.term, target, self.registry) if only is None else None
        if ac is not None:
            self._push(ac)
            return self
        raise AssertionError(
            f"{self.name}: no single step or AC rearrangement from\n  {print_term(self.term)}\nto\n  {print_term(target)}"
        )

    def chain(self, *targets: str | Term) -> Derivation:
        for t in targets:
            self.to(t)
        return self

    def meet(self, other: Derivation) -> Derivation:
        """Append the reverse of ``other`` (a derivation starting at this proof's rhs)."""
        if other.term != self.term:
            self.to(other.term)
        self._push(reverse_steps(other.steps))
        return self

    def qed(self, rhs: str | Term | None = None) -> Proof:
        if rhs is not None:
            self.to(rhs)
        return Proof(self.name, self.lhs, self.term, tuple(self.steps))
