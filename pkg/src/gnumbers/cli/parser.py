"""Recursive-descent parser and unparser for the expression language.

Grammar (LL(1))::

    statement := 'let' IDENT '=' expr | expr
    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := ('-' | '+') unary | power
    power     := atom ('^' ['-'] NUMBER)?
    atom      := NUMBER | IMAG | IDENT | IDENT '(' [expr (',' expr)*] ')'
               | '(' expr ')'

``^`` binds tighter than unary minus, so ``-a^2`` is ``-(a^2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .lexer import ParseError, Token, tokenize


@dataclass(frozen=True)
class Num:
    value: Union[float, complex]
    text: str


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class Let:
    name: str
    expr: "Expr"


Expr = Union[Num, Name, Neg, BinOp, Pow, Call]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            self.fail(repr(op))
        return self.advance()

    def fail(self, expected: str):
        tok = self.tok
        raise ParseError(tok.line, tok.column, expected, tok.describe())

    def statement(self):
        if self.tok.kind == "IDENT" and self.tok.text == "let":
            self.advance()
            if self.tok.kind != "IDENT":
                self.fail("a name to bind")
            name = self.advance().text
            self.expect_op("=")
            node = Let(name, self.expr())
        else:
            node = self.expr()
        if self.tok.kind != "EOF":
            self.fail("an operator or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at_op("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return Neg(self.unary())
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            sign = 1
            if self.at_op("-"):
                self.advance()
                sign = -1
            tok = self.tok
            if tok.kind != "NUMBER" or not tok.text.isdigit():
                self.fail("an integer exponent")
            self.advance()
            return Pow(base, sign * int(tok.text))
        return base

    def atom(self):
        tok = self.tok
        if tok.kind == "NUMBER":
            self.advance()
            return Num(float(tok.text), tok.text)
        if tok.kind == "IMAG":
            self.advance()
            return Num(complex(0, float(tok.text[:-1])), tok.text)
        if tok.kind == "IDENT":
            self.advance()
            if self.at_op("("):
                self.advance()
                args = []
                if not self.at_op(")"):
                    args.append(self.expr())
                    while self.at_op(","):
                        self.advance()
                        args.append(self.expr())
                self.expect_op(")")
                return Call(tok.text, tuple(args))
            return Name(tok.text)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        self.fail("an expression")


def parse(text: str):
    """Parse one statement (an expression or a ``let`` binding)."""
    return _Parser(tokenize(text)).statement()


# -- unparsing ------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def unparse(node) -> str:
    """Canonical source text; ``parse(unparse(x)) == x`` up to ``Num.text``."""
    return _unparse(node, 0)


def _unparse(node, prec: int) -> str:
    if isinstance(node, Let):
        return f"let {node.name} = {_unparse(node.expr, 0)}"
    if isinstance(node, Num):
        return node.text
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return f"{node.func}({', '.join(_unparse(a, 0) for a in node.args)})"
    if isinstance(node, Pow):
        text = f"{_unparse(node.base, 5)}^{node.exponent}"
        return f"({text})" if prec > 4 else text
    if isinstance(node, Neg):
        text = f"-{_unparse(node.operand, 3)}"
        return f"({text})" if prec > 3 else text
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        # left-associative: the right operand needs parens at equal precedence
        text = f"{_unparse(node.left, p)} {node.op} {_unparse(node.right, p + 1)}"
        return f"({text})" if prec > p else text
    raise TypeError(f"not an expression node: {node!r}")
