import random
import shutil
from dataclasses import replace

import pytest

from meadow.axioms import AXIOMS, FC, LAGRANGE, MD, SIGNS
from meadow.equiv import CounterexampleFound, NoCounterexample, SampleConfig, equiv_random
from meadow.errors import InvalidPath, ProofError, ProofFormatError, RedexMismatch, UnknownRule
from meadow.numerics import Model
from meadow.proofs import (
    LR,
    RL,
    SYMBOLS,
    Failure,
    Proof,
    ProofStep,
    Registry,
    Verified,
    apply_step,
    check_axiom,
    check_proof,
    check_proofs,
    check_propagation,
    corpus_files,
    format_proof,
    load_corpus,
    max_min_checks,
    parse_proofs,
    run_corpus,
    single_layer_contexts,
)
from meadow.syntax import parse
from meadow.term import Var


def step(path, rule, direction=LR, **sigma):
    return ProofStep(tuple(path), rule, direction, {k: parse(v) for k, v in sigma.items()})


def test_axiom_table_names():
    assert [r.name for r in MD] == [f"md.{i}" for i in range(1, 11)]
    assert [r.name for r in SIGNS] == [f"signs.{i}" for i in range(1, 7)]
    assert [r.name for r in FC] == [f"fc.{i}" for i in range(1, 8)]
    assert str(AXIOMS["md.10"]) == "md.10: x * one(x) = x"


def test_apply_step_examples():
    assert apply_step(parse("x * (x * x^-1)"), step((), "md.10")) == parse("x")
    assert apply_step(parse("1 * y"), step((), "md.7", x="y")) == parse("y")
    with pytest.raises(RedexMismatch) as info:
        apply_step(parse("0 + z"), step((), "md.10"))
    assert "expected x * one(x)" in str(info.value) and "found 0 + z" in str(info.value)


def test_apply_step_right_to_left_and_inside():
    t = parse("a + b * 1")
    assert apply_step(t, step((1,), "md.6", x="b", y="1")) == parse("a + 1 * b")
    assert apply_step(parse("a + y"), step((1,), "md.7", RL, x="y")) == parse("a + 1 * y")


def test_apply_step_errors():
    with pytest.raises(InvalidPath):
        apply_step(parse("x"), step((0,), "md.3"))
    with pytest.raises(UnknownRule, match="no_such"):
        apply_step(parse("x"), step((), "no_such"))
    with pytest.raises(ProofError, match="do not occur"):
        apply_step(parse("x + 0"), step((), "md.3", q="x"))


def test_unbound_rule_variables_stay_literal():
    # md.3 with no substitution rewrites exactly the term x + 0
    assert apply_step(parse("x + 0"), step((), "md.3")) == Var("x")
    with pytest.raises(RedexMismatch):
        apply_step(parse("y + 0"), step((), "md.3"))


def test_check_proof_registers_lemma():
    reg = Registry()
    proof = Proof("plus_zero_l", parse("0 + y"), parse("y"), (step((), "md.2", x="0", y="y"), step((), "md.3", x="y")))
    assert check_proof(proof, reg) == Verified("plus_zero_l", 2, ("md.2", "md.3"))
    assert "plus_zero_l" in reg
    again = check_proof(Proof("again", parse("0 + a"), parse("a"), (step((), "plus_zero_l", y="a"),)), reg)
    assert isinstance(again, Verified)
    duplicate = check_proof(proof, reg)
    assert isinstance(duplicate, Failure) and "duplicate" in str(duplicate.error)


def test_check_proof_failures_carry_step_index():
    reg = Registry()
    bad = Proof("bad", parse("0 + y"), parse("y"), (step((), "md.2", x="0", y="y"), step((), "md.3", x="0")))
    f = check_proof(bad, reg)
    assert isinstance(f, Failure) and f.step == 2 and isinstance(f.error, RedexMismatch)
    short = Proof("short", parse("0 + y"), parse("y"), (step((), "md.2", x="0", y="y"),))
    f = check_proof(short, reg)
    assert f.step == 2 and "not the stated rhs" in str(f.error)
    assert "bad" not in reg and "short" not in reg


PROOF_TEXT = """\
# a comment line
theorem plus_zero_l
lhs 0 + y
rhs y   # trailing comment
step root md.2 LR x=0 y=y
step root md.3 LR x=y
qed

theorem one_r
lhs x * 1
rhs x
step root md.6 LR y=1
step root md.7 LR
qed
"""


def test_parse_and_format_round_trip():
    proofs = parse_proofs(PROOF_TEXT, "demo.proof")
    assert [p.name for p in proofs] == ["plus_zero_l", "one_r"]
    assert proofs[0].steps[0] == step((), "md.2", x="0", y="y")
    assert proofs[0].line == 2 and proofs[0].source == "demo.proof"
    assert parse_proofs("".join(format_proof(p) for p in proofs)) == proofs
    report = check_proofs(proofs)
    assert report.ok and [v.steps for v in report.verified] == [2, 2]


def test_bindings_may_contain_spaces():
    [p] = parse_proofs("theorem t\nlhs (a + b) + 0\nrhs a + b\nstep root md.3 LR x=a + b\nqed\n")
    assert p.steps[0].substitution == {"x": parse("a + b")}
    assert isinstance(check_proof(p, Registry()), Verified)


@pytest.mark.parametrize(
    "text, message",
    [
        ("lhs x\n", "outside a theorem"),
        ("theorem a\nlhs x\nrhs x\n", "missing qed"),
        ("theorem a\nlhs x\nqed\n", "needs both"),
        ("theorem a\nlhs x\nlhs x\n", "duplicate lhs"),
        ("theorem a\nlhs x\nrhs x\nstep root md.1 UP\nqed\n", "direction"),
        ("theorem a\nlhs x\nrhs x\nstep 0.x md.1 LR\nqed\n", "bad path"),
        ("theorem a\nlhs x\nrhs x\nstep root md.1 LR x=1 x=0\nqed\n", "bound twice"),
        ("theorem a\nlhs x +\nrhs x\nqed\n", "line 1"),
        ("theorem a b\n", "bad theorem name"),
        ("theorem a\nprove a\n", "unknown directive"),
        ("prove a\n", "outside a theorem"),
        ("theorem a\ntheorem b\n", "missing qed"),
    ],
)
def test_format_errors(text, message):
    with pytest.raises(ProofFormatError, match=message):
        parse_proofs(text, "f.proof")


def test_format_error_has_line_number():
    with pytest.raises(ProofFormatError) as info:
        parse_proofs("theorem a\nlhs x\nrhs x\nstep root md.1 UP\nqed\n", "f.proof")
    assert info.value.line == 4 and str(info.value).startswith("f.proof:4:")


# ---------------------------------------------------------------- corpus


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


def test_corpus_files_are_ordered():
    names = [f.name for f in corpus_files()]
    assert names == sorted(names) and len(names) >= 4


def test_corpus_verifies(corpus):
    report = run_corpus(sanity=None)
    assert report.ok, report.lines()[-1]
    assert len(report.verified) == len(corpus)
    assert all(line.startswith("VERIFIED ") for line in report.lines())


EXPECTED = {
    "zero_inv": ("0^-1", "0"),
    "neg_inv": ("-(x^-1)", "(-x)^-1"),
    "mul_inv": ("x^-1 * y^-1", "(x * y)^-1"),
    "zero_mul": ("0 * x", "0"),
    "mul_neg": ("x * -y", "-(x * y)"),
    "neg_neg": ("-(-x)", "x"),
    "pu_mul": ("one(x) * x", "x"),
    "pu_inv": ("one(x) * x^-1", "x^-1"),
    "pu_sq": ("one(x) * one(x)", "one(x)"),
    "pu_pz": ("one(x) * zero(x)", "0"),
    "pz_mul": ("zero(x) * x", "0"),
    "pz_inv": ("zero(x) * x^-1", "0"),
    "pz_sq": ("zero(x) * zero(x)", "zero(x)"),
    "sign_zero": ("s(0)", "0"),
    "sign_one": ("s(1)", "1"),
    "sign_square": ("s(x * x)", "one(x)"),
    "sign_cube": ("s(x * x * x)", "s(x)"),
    "sign_unit": ("one(x) * s(x)", "s(x)"),
    "sign_inv": ("s(x)^-1", "s(x)"),
    "sign_cases": ("s(x) * (1 - s(x)) * (1 + s(x))", "0"),
    "sign_zero_part": ("zero(x) * s(x)", "zero(x) * x"),
    "sign_one_part": ("zero(1 - y) * s(y)", "zero(1 - y) * y"),
    "sign_minus_sign": (
        "one(s(x)) * one(1 - s(x)) * s(s(x))",
        "one(s(x)) * one(1 - s(x)) * s(x)",
    ),
    "sign_idem_zero_case": ("zero(s(x)) * s(s(x))", "zero(s(x)) * s(x)"),
    "sign_idem_unit_case": ("one(s(x)) * s(s(x))", "one(s(x)) * s(x)"),
    "sign_idem_mixed_case": (
        "one(s(x)) * zero(1 - s(x)) * s(s(x))",
        "one(s(x)) * zero(1 - s(x)) * s(x)",
    ),
    "sign_idem": ("s(s(x))", "s(x)"),
}


def test_corpus_contains_the_stated_identities(corpus):
    by_name = {p.name: p for p in corpus}
    for name, (lhs, rhs) in EXPECTED.items():
        assert (by_name[name].lhs, by_name[name].rhs) == (parse(lhs), parse(rhs)), name


def test_corpus_propagation_theorems(corpus):
    names = {p.name for p in corpus}
    for mode in ("unit", "zero"):
        for op in ("add_left", "add_right", "mul_left", "mul_right", "neg", "inv", "sign", "floor", "ceil"):
            assert f"prop_{op}_{mode}" in names


def test_corpus_is_semantically_sound(corpus):
    for p in corpus:
        assert isinstance(equiv_random(p.lhs, p.rhs, SampleConfig(samples=500)), NoCounterexample), p.name


def _mutants(p):
    for i, s in enumerate(p.steps):
        yield i, s.flipped()
        if s.path:
            for d in (1, -1):
                q = list(s.path)
                q[-1] += d
                if q[-1] >= 0:
                    yield i, replace(s, path=tuple(q))
        else:
            yield i, replace(s, path=(0,))


def test_every_single_step_mutation_fails(corpus):
    reg = Registry()
    for p in corpus:
        for i, m in _mutants(p):
            steps = list(p.steps)
            steps[i] = m
            result = check_proof(replace(p, steps=tuple(steps)), reg.copy())
            assert isinstance(result, Failure), (p.name, i, m)
            assert 1 <= result.step <= len(p.steps) + 1
        assert isinstance(check_proof(p, reg), Verified)


def test_flipped_step_fails_at_that_step(corpus):
    reg = Registry()
    checked = 0
    for p in corpus:
        steps = list(p.steps)
        steps[0] = steps[0].flipped()
        result = check_proof(replace(p, steps=tuple(steps)), reg.copy())
        assert isinstance(result, Failure) and result.step == 1
        check_proof(p, reg)
        checked += 1
    assert checked == len(corpus)


def test_missing_corpus_directory(tmp_path):
    missing = tmp_path / "proofs.d"
    with pytest.raises(FileNotFoundError, match="proofs.d"):
        run_corpus(missing)


def test_deleting_a_lemma_breaks_its_dependents(tmp_path):
    for f in corpus_files():
        shutil.copy(f, tmp_path / f.name)
    sign = tmp_path / "02_sign.proof"
    kept = [p for p in parse_proofs(sign.read_text()) if p.name != "sign_zero_part"]
    sign.write_text("\n".join(format_proof(p) for p in kept))
    report = run_corpus(tmp_path, sanity=None)
    assert not report.ok
    assert report.failure.name == "sign_idem"
    assert isinstance(report.failure.error, UnknownRule)
    assert "sign_zero_part" in str(report.failure.error)
    assert report.lines()[-1].startswith("FAILED ")


def test_report_lists_steps_and_rules():
    report = run_corpus()
    first = report.lines()[0]
    assert first.startswith("VERIFIED zero_mul steps=") and "rules=md.3,md.4" in first
    assert [line for line in report.lines() if line.startswith("SANITY")] == [
        "SANITY max(x,0)=(s(x)+1)*x/2 EQUIV-SAMPLED n=200",
        "SANITY max(x,y)=max(x-y,0)+y EQUIV-SAMPLED n=200",
        "SANITY min(x,y)=-max(-x,-y) EQUIV-SAMPLED n=200",
    ]


# ---------------------------------------------------------------- semantic checks


@pytest.mark.parametrize("name", sorted(AXIOMS))
def test_axioms_hold_in_q0(name):
    assert check_axiom(AXIOMS[name], SampleConfig(samples=300)) == NoCounterexample(300)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_meadow_axioms_hold_in_prime_fields(p):
    for rule in MD:
        assert isinstance(check_axiom(rule, SampleConfig(samples=100), Model(p)), NoCounterexample)


def test_lagrange():
    assert check_axiom(LAGRANGE, SampleConfig(samples=300)) == NoCounterexample(300)


def test_axiom_check_detects_a_false_rule():
    from meadow.axioms import Rule

    assert isinstance(check_axiom(Rule("bogus", parse("x * x^-1"), parse("1"))), CounterexampleFound)


@pytest.mark.parametrize("symbol", sorted(SYMBOLS))
@pytest.mark.parametrize("mode", ["unit", "zero"])
def test_propagation(symbol, mode):
    assert check_propagation(symbol, mode, SampleConfig(samples=200)) == NoCounterexample(200)


def test_contexts():
    assert len(single_layer_contexts("+")) == 2
    assert len(single_layer_contexts("floor")) == 1
    assert single_layer_contexts("0")[0](Var("r")) == parse("0")
    with pytest.raises(Exception, match="unknown function symbol"):
        single_layer_contexts("max")
    with pytest.raises(Exception, match="mode"):
        check_propagation("+", "both")


def test_propagation_check_is_sensitive():
    # the same shape with the wrong pseudo element is refuted
    e, wrong = parse("one(t)"), parse("zero(t)")
    lhs = parse("one(t) * floor(r)")
    rhs = parse("one(t) * floor(zero(t) * r)")
    assert e != wrong
    assert isinstance(equiv_random(lhs, rhs), CounterexampleFound)


def test_max_min_checks():
    verdicts = max_min_checks(SampleConfig(samples=300))
    assert all(v == NoCounterexample(300) for v in verdicts.values())


def test_random_mutations_sample():
    corpus = load_corpus()
    rng = random.Random(0)
    reg = Registry()
    snapshots = []
    for p in corpus:
        snapshots.append(reg.copy())
        check_proof(p, reg)
    for _ in range(100):
        k = rng.randrange(len(corpus))
        p = corpus[k]
        i = rng.randrange(len(p.steps))
        steps = list(p.steps)
        steps[i] = steps[i].flipped() if rng.random() < 0.5 else replace(steps[i], path=steps[i].path + (0,))
        assert isinstance(check_proof(replace(p, steps=tuple(steps)), snapshots[k].copy()), Failure)
