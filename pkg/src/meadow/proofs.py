"""A small kernel for equational proofs by positioned rewriting.

A proof of ``lhs = rhs`` is a list of steps.  Each step names a rule (an axiom
or an earlier checked theorem), a direction, a path to the rewritten subterm and
an explicit substitution for the rule's variables.  The kernel instantiates the
rule, compares the instantiated side with the subterm at the path, and replaces
it with the other side.  There is no matching, no search and no implicit
associativity or commutativity: the last term must equal ``rhs`` exactly.

Proof files are line oriented::

    # comment
    theorem <name>
    lhs <expression>
    rhs <expression>
    step <path|root> <rule> <LR|RL> [<var>=<expression>]...
    qed
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path as FsPath
from typing import Union

from .axioms import AXIOMS, Rule
from .equiv import CounterexampleFound, NoCounterexample, RandomVerdict, SampleConfig, equiv_random, sample_assignments
from .errors import InvalidPath, MeadowError, ProofError, ProofFormatError, RedexMismatch, UnknownRule
from .numerics import Q0, Model
from .syntax import parse, print_term
from .term import (
    ONE,
    ZERO,
    Add,
    Ceil,
    Floor,
    Inv,
    Mul,
    Neg,
    Path,
    Sign,
    Term,
    Var,
    evaluate,
    format_path,
    max_term,
    min_term,
    pseudo_unit,
    pseudo_zero,
    replace_at,
    substitute,
    subterm_at,
)

LR, RL = "LR", "RL"


@dataclass(frozen=True)
class ProofStep:
    path: Path
    rule: str
    direction: str = LR
    substitution: Mapping[str, Term] = field(default_factory=dict)
    line: int = field(default=0, compare=False)

    def flipped(self) -> ProofStep:
        return ProofStep(self.path, self.rule, RL if self.direction == LR else LR, self.substitution, self.line)


@dataclass(frozen=True)
class Proof:
    name: str
    lhs: Term
    rhs: Term
    steps: tuple[ProofStep, ...]
    source: str = field(default="<string>", compare=False)
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Verified:
    name: str
    steps: int
    rules: tuple[str, ...]


@dataclass(frozen=True)
class Failure:
    name: str
    step: int  # 1-based; len(steps) + 1 when the final term differs from rhs
    error: MeadowError
    source: str = "<string>"
    line: int = 0

    def __str__(self) -> str:
        return f"{self.source}:{self.line}: theorem {self.name}, step {self.step}: {self.error}"


CheckResult = Union[Verified, Failure]


class Registry:
    """Axioms plus every theorem checked so far, addressable by name."""

    def __init__(self, rules: Iterable[Rule] = AXIOMS.values()):
        self._rules: dict[str, Rule] = {r.name: r for r in rules}

    def __contains__(self, name: str) -> bool:
        return name in self._rules

    def __getitem__(self, name: str) -> Rule:
        try:
            return self._rules[name]
        except KeyError:
            raise UnknownRule(f"unknown rule or lemma {name!r}") from None

    def names(self) -> list[str]:
        return list(self._rules)

    def register(self, rule: Rule) -> None:
        if rule.name in self._rules:
            raise ProofError(f"duplicate theorem name {rule.name!r}")
        self._rules[rule.name] = rule

    def copy(self) -> Registry:
        return Registry(self._rules.values())


def instantiate(rule: Rule, direction: str, substitution: Mapping[str, Term]) -> tuple[Term, Term]:
    """``(redex, contractum)`` of the rule instance; unbound rule variables stay as they are."""
    if direction not in (LR, RL):
        raise ProofError(f"direction must be LR or RL, got {direction!r}")
    extra = set(substitution) - rule.variables
    if extra:
        raise ProofError(f"substitution binds {', '.join(sorted(extra))}, which do not occur in {rule.name}")
    lhs, rhs = substitute(rule.lhs, substitution), substitute(rule.rhs, substitution)
    return (lhs, rhs) if direction == LR else (rhs, lhs)


def apply_step(t: Term, step: ProofStep, registry: Registry | None = None) -> Term:
    registry = registry if registry is not None else Registry()
    rule = registry[step.rule]
    redex, contractum = instantiate(rule, step.direction, step.substitution)
    found = subterm_at(t, step.path)
    if found != redex:
        raise RedexMismatch(print_term(redex), f"{print_term(found)} at {format_path(step.path)}")
    return replace_at(t, step.path, contractum)


def check_proof(proof: Proof, registry: Registry) -> CheckResult:
    """Replay ``proof`` from its lhs.  On success the theorem is registered."""
    t = proof.lhs
    for i, step in enumerate(proof.steps, start=1):
        try:
            t = apply_step(t, step, registry)
        except (ProofError, InvalidPath) as e:
            return Failure(proof.name, i, e, proof.source, step.line or proof.line)
    if t != proof.rhs:
        err = ProofError(f"derivation ends in {print_term(t)}, not the stated rhs {print_term(proof.rhs)}")
        return Failure(proof.name, len(proof.steps) + 1, err, proof.source, proof.line)
    try:
        registry.register(Rule(proof.name, proof.lhs, proof.rhs))
    except ProofError as e:
        return Failure(proof.name, 0, e, proof.source, proof.line)
    return Verified(proof.name, len(proof.steps), tuple(dict.fromkeys(s.rule for s in proof.steps)))


# ---------------------------------------------------------------- file format

_BINDING_SPLIT = re.compile(r"\s+(?=[A-Za-z_][A-Za-z0-9_']*=)")


def _parse_path(text: str) -> Path:
    if text == "root":
        return ()
    if not re.fullmatch(r"\d+(\.\d+)*", text):
        raise ValueError(f"bad path {text!r}")
    return tuple(int(p) for p in text.split("."))


def parse_proofs(text: str, source: str = "<string>") -> list[Proof]:
    proofs: list[Proof] = []
    current: dict | None = None

    def fail(msg: str, lineno: int) -> ProofFormatError:
        return ProofFormatError(msg, source, lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if keyword == "theorem":
                if current is not None:
                    raise fail(f"theorem {current['name']} is missing qed", lineno)
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.\-']*", rest):
                    raise fail(f"bad theorem name {rest!r}", lineno)
                current = {"name": rest, "lhs": None, "rhs": None, "steps": [], "line": lineno}
            elif current is None:
                raise fail(f"{keyword!r} outside a theorem", lineno)
            elif keyword in ("lhs", "rhs"):
                if current[keyword] is not None:
                    raise fail(f"duplicate {keyword}", lineno)
                current[keyword] = parse(rest)
            elif keyword == "step":
                current["steps"].append(_parse_step(rest, lineno))
            elif keyword == "qed":
                if current["lhs"] is None or current["rhs"] is None:
                    raise fail(f"theorem {current['name']} needs both lhs and rhs", lineno)
                proofs.append(
                    Proof(current["name"], current["lhs"], current["rhs"], tuple(current["steps"]), source, current["line"])
                )
                current = None
            else:
                raise fail(f"unknown directive {keyword!r}", lineno)
        except ProofFormatError:
            raise
        except (MeadowError, ValueError) as e:
            raise fail(str(e), lineno) from e
    if current is not None:
        raise ProofFormatError(f"theorem {current['name']} is missing qed", source, current["line"])
    return proofs


def _parse_step(text: str, lineno: int) -> ProofStep:
    head, *bindings = _BINDING_SPLIT.split(text)
    parts = head.split()
    if len(parts) != 3:
        raise ValueError("step needs <path> <rule> <LR|RL> before any bindings")
    path, rule, direction = parts
    if direction not in (LR, RL):
        raise ValueError(f"direction must be LR or RL, got {direction!r}")
    sigma: dict[str, Term] = {}
    for b in bindings:
        var, _, expr = b.partition("=")
        if var in sigma:
            raise ValueError(f"variable {var} bound twice")
        sigma[var] = parse(expr)
    return ProofStep(_parse_path(path), rule, direction, sigma, lineno)


def format_proof(proof: Proof) -> str:
    lines = [f"theorem {proof.name}", f"lhs {print_term(proof.lhs)}", f"rhs {print_term(proof.rhs)}"]
    for s in proof.steps:
        binds = "".join(f" {v}={print_term(e)}" for v, e in sorted(s.substitution.items()))
        lines.append(f"step {format_path(s.path)} {s.rule} {s.direction}{binds}")
    lines.append("qed")
    return "\n".join(lines) + "\n"


def load_proof_file(path: str | FsPath) -> list[Proof]:
    path = FsPath(path)
    return parse_proofs(path.read_text(encoding="utf-8"), str(path))


def corpus_files(directory: str | FsPath | None = None) -> list[FsPath]:
    """Proof files of a corpus directory in lexicographic order (the bundled corpus by default)."""
    if directory is None:
        directory = FsPath(str(resources.files("meadow") / "corpus"))
    directory = FsPath(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {directory}")
    return sorted(directory.glob("*.proof"))


def load_corpus(directory: str | FsPath | None = None) -> list[Proof]:
    return [p for f in corpus_files(directory) for p in load_proof_file(f)]


@dataclass
class CorpusReport:
    verified: list[Verified] = field(default_factory=list)
    failure: Failure | None = None
    sanity: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure is None

    def lines(self) -> list[str]:
        out = [f"VERIFIED {v.name} steps={v.steps} rules={','.join(v.rules)}" for v in self.verified]
        if self.failure is not None:
            out.append(f"FAILED {self.failure}")
        return out + self.sanity


def check_proofs(proofs: Iterable[Proof], registry: Registry | None = None) -> CorpusReport:
    """Check proofs in order, stopping at the first failure."""
    registry = registry if registry is not None else Registry()
    report = CorpusReport()
    for proof in proofs:
        result = check_proof(proof, registry)
        if isinstance(result, Failure):
            report.failure = result
            break
        report.verified.append(result)
    return report


def run_corpus(
    directory: str | FsPath | None = None,
    registry: Registry | None = None,
    sanity: SampleConfig | None = SampleConfig(),
) -> CorpusReport:
    """Check a corpus; unless ``sanity`` is None also test the max/min expansions by sampling."""
    report = check_proofs(load_corpus(directory), registry)
    if sanity is not None:
        report.sanity = [f"SANITY {name} {verdict.record()}" for name, verdict in max_min_checks(sanity).items()]
    return report


# ---------------------------------------------------------------- semantic checks

def check_axiom(rule: Rule, cfg: SampleConfig = SampleConfig(), model: Model = Q0) -> RandomVerdict:
    return equiv_random(rule.lhs, rule.rhs, cfg, model)


_X, _Y = Var("x"), Var("y")
_MAX_MIN = {
    "max(x,0)=(s(x)+1)*x/2": (max_term(_X, ZERO), lambda a: max(a["x"], 0)),
    "max(x,y)=max(x-y,0)+y": (max_term(_X, _Y), lambda a: max(a["x"], a["y"])),
    "min(x,y)=-max(-x,-y)": (min_term(_X, _Y), lambda a: min(a["x"], a["y"])),
}


def max_min_checks(cfg: SampleConfig = SampleConfig()) -> dict[str, RandomVerdict]:
    """Compare the sign-based max/min expansions with the ordinary max/min of Q."""
    out: dict[str, RandomVerdict] = {}
    for name, (term, reference) in _MAX_MIN.items():
        verdict: RandomVerdict = NoCounterexample(cfg.samples)
        for a in sample_assignments(["x", "y"], cfg):
            got, want = evaluate(term, Q0, a), reference(a)
            if got != want:
                verdict = CounterexampleFound(a, got, want)
                break
        out[name] = verdict
    return out


#: function symbols of the full signature and their constructors
SYMBOLS = {
    "0": ZERO,
    "1": ONE,
    "+": Add,
    "*": Mul,
    "-": Neg,
    "inv": Inv,
    "s": Sign,
    "floor": Floor,
    "ceil": Ceil,
}
UNIT, ZERO_MODE = "unit", "zero"


def single_layer_contexts(symbol: str) -> list:
    """Functions ``hole -> C[hole]`` for every one-symbol context built from ``symbol``.

    For a constant the only context is the constant itself, which ignores the hole.
    """
    try:
        f = SYMBOLS[symbol]
    except KeyError:
        raise MeadowError(f"unknown function symbol {symbol!r} (expected one of {', '.join(SYMBOLS)})") from None
    u = Var("u")
    if isinstance(f, Term):
        return [lambda hole: f]
    if f in (Add, Mul):
        return [lambda hole: f(hole, u), lambda hole: f(u, hole)]
    return [lambda hole: f(hole)]


def check_propagation(symbol: str, mode: str = UNIT, cfg: SampleConfig = SampleConfig()) -> RandomVerdict:
    """Sample ``E * C[r] = E * C[E * r]`` with ``E`` = one(t) (unit) or zero(t) (zero)."""
    if mode not in (UNIT, ZERO_MODE):
        raise MeadowError(f"mode must be {UNIT} or {ZERO_MODE}, got {mode!r}")
    t, r = Var("t"), Var("r")
    e = pseudo_unit(t) if mode == UNIT else pseudo_zero(t)
    for context in single_layer_contexts(symbol):
        verdict = equiv_random(Mul(e, context(r)), Mul(e, context(Mul(e, r))), cfg)
        if isinstance(verdict, CounterexampleFound):
            return verdict
    return NoCounterexample(cfg.samples)
