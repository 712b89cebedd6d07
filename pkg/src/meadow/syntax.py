"""Concrete syntax for terms: a recursive-descent parser and a minimal-parenthesis printer.

Grammar::

    expr    := add
    add     := mul (("+" | "-") mul)*
    mul     := unary (("*" | "/") unary)*
    unary   := "-" unary | postfix
    postfix := atom ("^" "-"? integer)*
    atom    := integer | ident | "(" expr ")"
             | ("s" | "floor" | "ceil" | "one" | "zero" | "inv") "(" expr ")"

Binary ``-`` and ``/``, integer literals, powers, ``one(t)`` and ``zero(t)`` are
expanded while parsing, so the result is always a plain :class:`Term`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MeadowSyntaxError
from .term import (
    Add,
    Ceil,
    Floor,
    Inv,
    Mul,
    Neg,
    One,
    Sign,
    Term,
    Var,
    Zero,
    numeral,
    numeral_value,
    power,
    pseudo_unit,
    pseudo_zero,
)

RESERVED = frozenset({"s", "floor", "ceil", "one", "zero", "inv"})

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\S))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", "op" or "eof"
    text: str
    line: int
    column: int


def _position(source: str, offset: int) -> tuple[int, int]:
    line = source.count("\n", 0, offset) + 1
    return line, offset - (source.rfind("\n", 0, offset) + 1) + 1


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(source, pos)
        if m is None:
            break
        line, column = _position(source, m.start(m.lastindex))
        if m.group(1) is not None:
            tokens.append(_Token("int", m.group(1), line, column))
        elif m.group(2) is not None:
            tokens.append(_Token("ident", m.group(2), line, column))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise MeadowSyntaxError(f"unexpected character {ch!r}", line, column)
            tokens.append(_Token("op", ch, line, column))
        pos = m.end()
    tokens.append(_Token("eof", "", *_position(source, len(source))))
    return tokens


_ATOM_START = frozenset({"integer", "identifier", "(", "-"} | {f"{w}(" for w in RESERVED})

_FUNCTIONS = {
    "s": Sign,
    "floor": Floor,
    "ceil": Ceil,
    "inv": Inv,
    "one": pseudo_unit,
    "zero": pseudo_zero,
}


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def fail(self, expected: frozenset[str]) -> MeadowSyntaxError:
        tok = self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return MeadowSyntaxError(f"unexpected {found}", tok.line, tok.column, expected)

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text: str) -> None:
        if not self.at(text):
            raise self.fail(frozenset({text}))
        self.i += 1

    def parse(self) -> Term:
        t = self.add()
        if self.tok.kind != "eof":
            raise self.fail(frozenset({"+", "-", "*", "/", "^", "end of input"}))
        return t

    def add(self) -> Term:
        t = self.mul()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.i += 1
            rhs = self.mul()
            t = Add(t, rhs) if op == "+" else Add(t, Neg(rhs))
        return t

    def mul(self) -> Term:
        t = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tok.text
            self.i += 1
            rhs = self.unary()
            t = Mul(t, rhs) if op == "*" else Mul(t, Inv(rhs))
        return t

    def unary(self) -> Term:
        if self.at("-"):
            self.i += 1
            return Neg(self.unary())
        return self.postfix()

    def postfix(self) -> Term:
        t = self.atom()
        while self.at("^"):
            self.i += 1
            negative = self.at("-")
            if negative:
                self.i += 1
            if self.tok.kind != "int":
                raise self.fail(frozenset({"integer"} if negative else {"integer", "-"}))
            k = int(self.tok.text)
            self.i += 1
            t = power(t, -k if negative else k)
        return t

    def atom(self) -> Term:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return numeral(int(tok.text))
        if tok.kind == "ident":
            self.i += 1
            if tok.text in RESERVED:
                self.expect("(")
                arg = self.add()
                self.expect(")")
                return _FUNCTIONS[tok.text](arg)
            return Var(tok.text)
        if self.at("("):
            self.i += 1
            t = self.add()
            self.expect(")")
            return t
        raise self.fail(_ATOM_START)


def parse(source: str) -> Term:
    """Parse an expression; raises MeadowSyntaxError on the first error."""
    return _Parser(source).parse()


# precedence levels used by the printer
_ADD, _MUL, _UNARY, _POSTFIX, _ATOM = 1, 2, 3, 4, 5


def _render(t: Term) -> tuple[str, int]:
    n = numeral_value(t)
    if n is not None:
        return str(n), _ATOM
    match t:
        case Var(name):
            return name, _ATOM
        case Add(One(), Neg(Mul(a, Inv(b)))) if a == b:
            return f"zero({print_term(a)})", _ATOM
        case Add(a, Neg(b)):
            return f"{_wrap(a, _ADD)} - {_wrap(b, _MUL)}", _ADD
        case Add(a, b):
            return f"{_wrap(a, _ADD)} + {_wrap(b, _MUL)}", _ADD
        case Mul(a, Inv(b)) if a == b:
            return f"one({print_term(a)})", _ATOM
        case Mul(a, b):
            return f"{_wrap(a, _MUL)} * {_wrap(b, _UNARY)}", _MUL
        case Neg(a):
            return f"-{_wrap(a, _UNARY)}", _UNARY
        case Inv(a):
            return f"{_wrap(a, _POSTFIX)}^-1", _POSTFIX
        case Sign(a):
            return f"s({print_term(a)})", _ATOM
        case Floor(a):
            return f"floor({print_term(a)})", _ATOM
        case Ceil(a):
            return f"ceil({print_term(a)})", _ATOM
    raise TypeError(f"not a term: {t!r}")


def _wrap(t: Term, needed: int) -> str:
    text, prec = _render(t)
    return text if prec >= needed else f"({text})"


def print_term(t: Term) -> str:
    return _render(t)[0]

