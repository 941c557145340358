"""Closed arithmetic expressions: AST, recursive-descent parser, printer.

Grammar (standard precedence, unary minus binds tighter than * and /):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | atom
    atom    := literal | '(' expr ')' | func '(' args ')'
    func    := min | max | abs | recip | sqrt
    literal := integer | a/b | finite decimal

Rational literals are integers, finite decimals, or "a/b" written without
whitespace ("1/3" is the literal one third; "1 / 3" is Div(1, 3) — same
value, different tree).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Expr:
    pass


@dataclass(frozen=True)
class Lit(Expr):
    value: Fraction


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Min(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Max(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Abs(Expr):
    operand: Expr


@dataclass(frozen=True)
class Recip(Expr):
    operand: Expr


@dataclass(frozen=True)
class Sqrt(Expr):
    operand: Expr


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+/\d+|\d+\.\d+|\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[()+\-*/,]))"
)

_FUNCTIONS = {"min": (Min, 2), "max": (Max, 2), "abs": (Abs, 1),
              "recip": (Recip, 1), "sqrt": (Sqrt, 1)}


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append(_Token(kind=kind, text=m.group(kind), pos=m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.index += 1
        return tok

    def expect(self, text: str):
        tok = self.next()
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text!r}", tok.pos)

    def parse(self) -> Expr:
        e = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while (tok := self.peek()) is not None and tok.text in "+-":
            self.next()
            rhs = self.term()
            e = Add(e, rhs) if tok.text == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while (tok := self.peek()) is not None and tok.text in "*/":
            self.next()
            rhs = self.unary()
            e = Mul(e, rhs) if tok.text == "*" else Div(e, rhs)
        return e

    def unary(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok.text == "-":
            self.next()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        tok = self.next()
        if tok.kind == "number":
            if tok.text.partition("/")[2] == "0":
                raise ParseError("zero denominator in literal", tok.pos)
            return Lit(Fraction(tok.text))
        if tok.kind == "name":
            if tok.text not in _FUNCTIONS:
                raise ParseError(f"unknown function {tok.text!r}", tok.pos)
            node, arity = _FUNCTIONS[tok.text]
            self.expect("(")
            args = [self.expr()]
            while (nxt := self.peek()) is not None and nxt.text == ",":
                self.next()
                args.append(self.expr())
            self.expect(")")
            if len(args) != arity:
                raise ParseError(
                    f"{tok.text} takes {arity} argument(s), got {len(args)}", tok.pos
                )
            return node(*args)
        if tok.text == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def unparse(e: Expr) -> str:
    """Print an expression; parse(unparse(e)) is structurally e when all
    literals are nonnegative (negative values belong under Neg)."""
    if isinstance(e, Lit):
        return str(e.value)
    if isinstance(e, Neg):
        return f"-{unparse(e.operand)}" if not isinstance(e.operand, (Add, Sub, Mul, Div)) \
            else f"-({unparse(e.operand)})"
    if isinstance(e, (Add, Sub, Mul, Div)):
        op = {Add: "+", Sub: "-", Mul: "*", Div: "/"}[type(e)]
        return f"({unparse(e.left)} {op} {unparse(e.right)})"
    if isinstance(e, (Min, Max)):
        name = "min" if isinstance(e, Min) else "max"
        return f"{name}({unparse(e.left)}, {unparse(e.right)})"
    if isinstance(e, Abs):
        return f"abs({unparse(e.operand)})"
    if isinstance(e, Recip):
        return f"recip({unparse(e.operand)})"
    if isinstance(e, Sqrt):
        return f"sqrt({unparse(e.operand)})"
    raise TypeError(f"not an expression node: {e!r}")
