import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import assignments, rationals, terms

from meadow.errors import NotSigmaM, SizeBudgetExceeded
from meadow.generators import random_terms
from meadow.numerics import Q0, q0_inv, random_rational
from meadow.poly import ONE_POLY, ZERO_POLY, Polynomial, poly_from_term
from meadow.smf import (
    Ratio,
    Split,
    is_well_formed,
    normalize,
    polynomials,
    render,
    smf_add,
    smf_eval,
    smf_inv,
    smf_mul,
    smf_neg,
    smf_to_term,
    smf_variables,
)
from meadow.syntax import parse
from meadow.term import evaluate, variables

X = Polynomial.variable("x")
Y = Polynomial.variable("y")


def P(text: str) -> Polynomial:
    return poly_from_term(parse(text))


polys = st.builds(
    lambda a, b, c: Polynomial.constant(a) + Polynomial.constant(b) * X + Polynomial.constant(c) * Y,
    st.integers(-3, 3), st.integers(-2, 2), st.integers(-2, 2),
)
ratios = st.builds(Ratio, polys, polys)
smfs = st.recursive(ratios, lambda sub: st.builds(Split, polys, sub, sub), max_leaves=6)


def test_normalize_examples():
    assert normalize(parse("x")) == Ratio(X, ONE_POLY)
    assert normalize(parse("inv(x)")) == Ratio(ONE_POLY, X)
    assert normalize(parse("0")) == Ratio(ZERO_POLY, ONE_POLY)


def test_level_zero_sum_has_the_two_guards():
    p, q = Ratio(P("a"), P("b")), Ratio(P("c"), P("d"))
    expected = Split(P("b"), q, Split(P("d"), p, Ratio(P("a * d + b * c"), P("b * d"))))
    assert smf_add(p, q) == expected


def test_level_zero_mul_neg_inv():
    p, q = Ratio(P("a"), P("b")), Ratio(P("c"), P("d"))
    assert smf_mul(p, q) == Ratio(P("a * c"), P("b * d"))
    assert smf_neg(p) == Ratio(P("-a"), P("b"))
    assert smf_inv(p) == Ratio(P("b"), P("a"))


def test_split_cases_distribute_over_left_guard_first():
    a, b, c = (Ratio(P(v), ONE_POLY) for v in "abc")
    left = Split(P("g"), a, b)
    right = Split(P("h"), c, c)
    out = smf_mul(left, right)
    assert isinstance(out, Split) and out.guard == P("g")
    assert out.on_zero == Split(P("h"), smf_mul(a, c), smf_mul(a, c))
    assert smf_neg(left) == Split(P("g"), smf_neg(a), smf_neg(b))
    assert smf_inv(left) == Split(P("g"), smf_inv(a), smf_inv(b))
    summed = smf_add(left, right)
    leaves = [n for n in _leaves(summed)]
    # 2 x 2 pairwise sums, each a level-0 sum with two nested guards
    assert summed.guard == P("g") and len(leaves) == 4 * 3


def _leaves(p):
    if isinstance(p, Split):
        yield from _leaves(p.on_zero)
        yield from _leaves(p.on_unit)
    else:
        yield p


def test_eval_examples():
    assert smf_eval(Ratio(ONE_POLY, X), {"x": Fraction(0)}) == 0
    branch = Split(X, Ratio(ONE_POLY, ONE_POLY), Ratio(ZERO_POLY, ONE_POLY))
    assert smf_eval(branch, {"x": Fraction(0)}) == 1
    assert smf_eval(branch, {"x": Fraction(3)}) == 0


def test_render():
    assert render(normalize(parse("x"))) == "(x)/(1)"
    assert render(normalize(parse("inv(x)"))) == "(1)/(x)"
    assert render(normalize(parse("x + inv(x)"))) == "[1 == 0 ? (1)/(x) : [x == 0 ? (x)/(1) : (x^2 + 1)/(x)]]"


def test_x_plus_inverse_agrees_with_the_term():
    t = parse("x + inv(x)")
    p = normalize(t)
    rng = random.Random(0)
    for _ in range(200):
        a = {"x": random_rational(rng, 100)}
        assert smf_eval(p, a) == evaluate(t, Q0, a)
    assert smf_eval(p, {"x": Fraction(0)}) == 0


@given(smfs, smfs, assignments())
def test_combinators_are_sound(p, q, a):
    vp, vq = smf_eval(p, a), smf_eval(q, a)
    assert smf_eval(smf_add(p, q), a) == vp + vq
    assert smf_eval(smf_mul(p, q), a) == vp * vq
    assert smf_eval(smf_neg(p), a) == -vp
    assert smf_eval(smf_inv(p), a) == q0_inv(vp)


@given(smfs, smfs)
def test_combinators_produce_valid_forms(p, q):
    for out in (smf_add(p, q), smf_mul(p, q), smf_neg(p), smf_inv(p)):
        assert is_well_formed(out)


@given(terms(names=("x", "y", "z"), max_leaves=12), assignments(("x", "y", "z")))
def test_normalize_is_sound(t, a):
    p = normalize(t)
    assert is_well_formed(p)
    assert smf_eval(p, a) == evaluate(t, Q0, a)
    assert smf_variables(p) <= variables(t)


@given(smfs, assignments())
def test_smf_to_term_reads_back(p, a):
    assert evaluate(smf_to_term(p), Q0, a) == smf_eval(p, a)


def test_normalize_rejects_extended_symbols_with_path():
    with pytest.raises(NotSigmaM) as info:
        normalize(parse("x + y * s(x)"))
    assert info.value.path == (1, 1)


def test_size_cap():
    t = parse("(x + inv(x)) * (y + inv(y)) * (z + inv(z))")
    assert normalize(t).size > 10
    with pytest.raises(SizeBudgetExceeded):
        normalize(t, size_cap=10)


def test_shared_subterms_are_memoized():
    t = parse("x + inv(x)")
    for _ in range(3):
        t = parse(f"({t}) * ({t})")
    assert normalize(t) == normalize(t)


def test_polynomials_and_variables():
    p = normalize(parse("x + inv(y)"))
    assert smf_variables(p) == {"x", "y"}
    assert all(isinstance(q, Polynomial) for q in polynomials(p))


def test_generated_terms_sound_small_batch():
    rng = random.Random(5)
    for t in random_terms(5, 60, 20, ["x", "y", "z"]):
        p = normalize(t)
        for _ in range(20):
            a = {v: random_rational(rng, 50) for v in "xyz"}
            assert smf_eval(p, a) == evaluate(t, Q0, a)


def test_level_reported():
    assert normalize(parse("x * y")).level == 0
    assert normalize(parse("x + y")).level == 2
    assert all(isinstance(_, Ratio) for _ in _leaves(normalize(parse("x + y + 1"))))


def test_values_at_rationals_are_exact():
    p = normalize(parse("(x + 1) / (x - 1)"))
    assert smf_eval(p, {"x": Fraction(1, 3)}) == Fraction(-2)
    assert smf_eval(p, {"x": Fraction(1)}) == 0


@given(rationals)
def test_inverse_convention_inside_forms(q):
    p = normalize(parse("inv(x - x) + x"))
    assert smf_eval(p, {"x": q}) == q
