import pytest
from hypothesis import given
from strategies import terms

from meadow.errors import MeadowSyntaxError
from meadow.syntax import RESERVED, parse, print_term
from meadow.term import ONE, Add, Ceil, Floor, Inv, Mul, Neg, Sign, Var, numeral

x, y = Var("x"), Var("y")


def test_parse_examples():
    assert parse("x * (x * x^-1)") == Mul(x, Mul(x, Inv(x)))
    assert parse("one(x)") == Mul(x, Inv(x))
    s = Sign(x)
    assert parse("s(x)*(1-s(x))*(1+s(x))") == Mul(Mul(s, Add(ONE, Neg(s))), Add(ONE, s))


def test_print_examples():
    assert print_term(Mul(x, Inv(y))) == "x * y^-1"
    assert print_term(Add(ONE, Neg(x))) == "1 - x"
    assert print_term(Floor(Neg(x))) == "floor(-x)"


@pytest.mark.parametrize(
    "text, term",
    [
        ("x - y - 1", Add(Add(x, Neg(y)), Neg(ONE))),
        ("x - (y - 1)", Add(x, Neg(Add(y, Neg(ONE))))),
        ("x / y / x", Mul(Mul(x, Inv(y)), Inv(x))),
        ("-x^2", Neg(Mul(x, x))),
        ("(-x)^2", Mul(Neg(x), Neg(x))),
        ("x^-2", Mul(Inv(x), Inv(x))),
        ("x^0", ONE),
        ("x^2^-1", Inv(Mul(x, x))),
        ("inv(x)", Inv(x)),
        ("zero(x)", Add(ONE, Neg(Mul(x, Inv(x))))),
        ("ceil(3)", Ceil(numeral(3))),
        ("x''", Var("x''")),
        ("  x\n +\ty ", Add(x, y)),
    ],
)
def test_precedence_and_sugar(text, term):
    assert parse(text) == term


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("x + * y", 1, 5),
        ("(x + y", 1, 7),
        ("x +\n  (y", 2, 5),
        ("s x", 1, 3),
        ("x ^ y", 1, 5),
        ("x $ y", 1, 3),
        ("", 1, 1),
        ("x y", 1, 3),
    ],
)
def test_syntax_errors_report_position(text, line, column):
    with pytest.raises(MeadowSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(MeadowSyntaxError) as info:
        parse("(x")
    assert info.value.expected == {")"}
    assert "expected one of: )" in str(info.value)


@pytest.mark.parametrize("word", sorted(RESERVED))
def test_reserved_words_are_not_variables(word):
    with pytest.raises(MeadowSyntaxError):
        parse(f"{word} + 1")


@given(terms(extended=True, max_leaves=60))
def test_parse_inverts_print(t):
    assert parse(print_term(t)) == t


@given(terms(extended=True, max_leaves=30))
def test_print_parse_idempotent(t):
    text = print_term(t)
    assert print_term(parse(text)) == text


def test_pseudo_units_and_numerals_contract():
    assert print_term(parse("one(x + 1)")) == "one(x + 1)"
    assert print_term(parse("zero(x) * 3")) == "zero(x) * 3"
    assert print_term(numeral(-2)) == "-2"
