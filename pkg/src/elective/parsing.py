"""Recursive-descent parser for the surface expression language.

Grammar (whitespace insignificant):

    equation  = expr "=" expr ;
    expr      = [ "-" ] term { ( "+" | "-" ) term } ;
    term      = postfix { [ "*" | "/" ] postfix } ;   adjacency means "*"
    postfix   = atom { "'" } ;
    atom      = INTEGER | SYMBOL | "(" expr ")" ;
    SYMBOL    = [a-z][a-z0-9_]* ;  INTEGER = [0-9]+ ;

Postfix ' binds tightest, then * / and juxtaposition, then + and binary -.
A leading - negates the first term only.  Names matching v[0-9]+ parse
normally but are reserved for generated indeterminate classes; the solver
refuses input that uses them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .expr import (
    Add,
    Compl,
    Const,
    Equation,
    Expr,
    Mul,
    Quot,
    Sub,
    Sym,
    Symbol,
    ZERO,
)

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>[0-9]+)|(?P<sym>[a-z][a-z0-9_]*)|(?P<op>[-+*/()'=])"
)

# Hard stop for pathological inputs such as thousands of open parentheses;
# keeps arbitrary-byte fuzzing from hitting the interpreter recursion limit.
_MAX_DEPTH = 200

_EOF = "end of input"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "sym" | "op" | "eof"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(
                pos, "a number, symbol, operator or parenthesis", repr(text[pos])
            )
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("eof", _EOF, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def accept_op(self, *ops: str) -> _Token | None:
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            return self.take()
        return None

    def fail(self, expected: str) -> ParseError:
        tok = self.peek()
        return ParseError(tok.offset, expected, tok.text)

    def expr(self) -> Expr:
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError(
                self.peek().offset,
                f"nesting no deeper than {_MAX_DEPTH} levels",
                "deeper nesting",
            )
        try:
            negate = self.accept_op("-") is not None
            node = self.term()
            if negate:
                # Fold the sign into a bare integer literal; anything else
                # becomes the explicit difference 0 - term.
                node = Const(-node.value) if isinstance(node, Const) else Sub(ZERO, node)
            while (tok := self.accept_op("+", "-")) is not None:
                rhs = self.term()
                node = Add(node, rhs) if tok.text == "+" else Sub(node, rhs)
            return node
        finally:
            self.depth -= 1

    def term(self) -> Expr:
        node = self.postfix()
        while True:
            tok = self.accept_op("*", "/")
            if tok is not None:
                rhs = self.postfix()
                node = Mul(node, rhs) if tok.text == "*" else Quot(node, rhs)
                continue
            nxt = self.peek()
            if nxt.kind in ("int", "sym") or (nxt.kind == "op" and nxt.text == "("):
                node = Mul(node, self.postfix())  # juxtaposition
                continue
            return node

    def postfix(self) -> Expr:
        node = self.atom()
        while self.accept_op("'") is not None:
            node = Compl(node)
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Const(int(tok.text))
        if tok.kind == "sym":
            self.take()
            return Sym(Symbol(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.take()
            node = self.expr()
            if self.accept_op(")") is None:
                raise self.fail("')'")
            return node
        raise self.fail("a number, a symbol or '('")


def parse_expression(text: str) -> Expr:
    """Parse a single expression; raises ParseError with the offset."""
    p = _Parser(text)
    node = p.expr()
    if p.peek().kind != "eof":
        raise p.fail("end of input")
    return node


def parse_equation(text: str) -> Equation:
    """Parse 'expr = expr' with exactly one '=' at top level."""
    p = _Parser(text)
    lhs = p.expr()
    if p.accept_op("=") is None:
        raise p.fail("'='")
    rhs = p.expr()
    if p.peek().kind != "eof":
        raise p.fail("end of input")
    return Equation(lhs, rhs)
