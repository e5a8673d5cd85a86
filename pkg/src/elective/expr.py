"""Abstract syntax for Boole's algebra of elective symbols.

An expression is a finite tree built from exact rational constants, elective
symbols (x selects the members of class X from the universe 1), and the
formal operations +, -, * and /.  The postfix complement x' is kept as its
own node but is definitionally sugar for 1 - x.

Expressions here are purely formal: + is not union and - is not set
difference.  Their class meaning, when they have one, is recovered by
developing them into constituent normal form (see the algebra module).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

SYMBOL_PATTERN = re.compile(r"[a-z][a-z0-9_]*\Z")

# v1, v2, ... are generated for indeterminate classes by the solver and are
# therefore reserved in solver input.
RESERVED_PATTERN = re.compile(r"v[0-9]+\Z")


@dataclass(frozen=True)
class Symbol:
    """An elective symbol: a lowercase identifier naming a class."""

    name: str

    def __post_init__(self):
        if not SYMBOL_PATTERN.match(self.name):
            raise ValueError(
                f"invalid symbol name {self.name!r}: "
                "expected a lowercase letter followed by letters, digits or '_'"
            )

    @property
    def is_reserved(self) -> bool:
        return bool(RESERVED_PATTERN.match(self.name))

    def __str__(self) -> str:
        return self.name


def symbols(names: str) -> tuple[Symbol, ...]:
    """Build a tuple of symbols from a comma- or space-separated string."""
    parts = [n for n in re.split(r"[,\s]+", names.strip()) if n]
    return tuple(Symbol(n) for n in parts)


ExprLike = Union["Expr", Symbol, int, Fraction]


class Expr:
    """Base class for expression nodes.  All nodes are immutable."""

    def __add__(self, other: ExprLike) -> "Expr":
        return Add(self, as_expr(other))

    def __radd__(self, other: ExprLike) -> "Expr":
        return Add(as_expr(other), self)

    def __sub__(self, other: ExprLike) -> "Expr":
        return Sub(self, as_expr(other))

    def __rsub__(self, other: ExprLike) -> "Expr":
        return Sub(as_expr(other), self)

    def __mul__(self, other: ExprLike) -> "Expr":
        return Mul(self, as_expr(other))

    def __rmul__(self, other: ExprLike) -> "Expr":
        return Mul(as_expr(other), self)

    def __truediv__(self, other: ExprLike) -> "Expr":
        return Quot(self, as_expr(other))

    def __rtruediv__(self, other: ExprLike) -> "Expr":
        return Quot(as_expr(other), self)

    def __invert__(self) -> "Expr":
        return Compl(self)

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Sym(Expr):
    symbol: Symbol

    def __post_init__(self):
        if isinstance(self.symbol, str):
            object.__setattr__(self, "symbol", Symbol(self.symbol))


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
class Quot(Expr):
    """Formal division.  Only meaningful through development (see expand)."""

    left: Expr
    right: Expr


@dataclass(frozen=True)
class Compl(Expr):
    """Postfix complement: Compl(e) stands for 1 - e."""

    operand: Expr


ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))


def as_expr(value: ExprLike) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, Symbol):
        return Sym(value)
    if isinstance(value, (int, Fraction)):
        return Const(Fraction(value))
    raise TypeError(f"cannot treat {value!r} as an expression")


def free_symbols(e: Expr) -> tuple[Symbol, ...]:
    """All symbols of e, in first-occurrence (leftmost) order."""
    seen: dict[Symbol, None] = {}

    def walk(node: Expr) -> None:
        if isinstance(node, Sym):
            seen.setdefault(node.symbol)
        elif isinstance(node, (Add, Sub, Mul, Quot)):
            walk(node.left)
            walk(node.right)
        elif isinstance(node, Compl):
            walk(node.operand)

    walk(e)
    return tuple(seen)


def contains_quotient(e: Expr) -> bool:
    if isinstance(e, Quot):
        return True
    if isinstance(e, (Add, Sub, Mul)):
        return contains_quotient(e.left) or contains_quotient(e.right)
    if isinstance(e, Compl):
        return contains_quotient(e.operand)
    return False


def substitute(e: Expr, mapping: Mapping[Symbol, ExprLike]) -> Expr:
    """Replace symbols by expressions, rebuilding only what changes."""
    replacements = {s: as_expr(v) for s, v in mapping.items()}

    def walk(node: Expr) -> Expr:
        if isinstance(node, Sym):
            return replacements.get(node.symbol, node)
        if isinstance(node, (Add, Sub, Mul, Quot)):
            return type(node)(walk(node.left), walk(node.right))
        if isinstance(node, Compl):
            return Compl(walk(node.operand))
        return node

    return walk(e)


def desugar_complements(e: Expr) -> Expr:
    """Rewrite every complement node into the explicit form 1 - e."""
    if isinstance(e, Compl):
        return Sub(ONE, desugar_complements(e.operand))
    if isinstance(e, (Add, Sub, Mul, Quot)):
        return type(e)(desugar_complements(e.left), desugar_complements(e.right))
    return e


@dataclass(frozen=True)
class Equation:
    """An ordered pair of expressions asserted equal."""

    lhs: Expr
    rhs: Expr

    def homogeneous(self) -> Expr:
        """The expression whose vanishing states the equation (lhs - rhs)."""
        if self.rhs == ZERO:
            return self.lhs
        return Sub(self.lhs, self.rhs)

    def free_symbols(self) -> tuple[Symbol, ...]:
        seen: dict[Symbol, None] = {}
        for s in free_symbols(self.lhs):
            seen.setdefault(s)
        for s in free_symbols(self.rhs):
            seen.setdefault(s)
        return tuple(seen)

    def __str__(self) -> str:
        return f"{format_expr(self.lhs)} = {format_expr(self.rhs)}"


# Precedence levels used by the renderer; must agree with the parser.
_PREC_ADD = 1
_PREC_MUL = 2
_PREC_POSTFIX = 3
_PREC_ATOM = 4


def _prec(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _PREC_ADD
    if isinstance(e, (Mul, Quot)):
        return _PREC_MUL
    if isinstance(e, Compl):
        return _PREC_POSTFIX
    return _PREC_ATOM


def format_expr(e: Expr) -> str:
    """Render an expression in the surface grammar.

    Parentheses are minimal for the grammar's precedence (postfix ' binds
    tightest, then * and /, then + and -).  Negative and non-integer
    constants are always parenthesized so the output re-parses to the same
    tree; re-parsing a non-integer constant yields the equivalent quotient
    of integers, since the grammar has integer literals only.
    """

    def render(node: Expr, min_prec: int) -> str:
        p = _prec(node)
        if isinstance(node, Const):
            v = node.value
            if v >= 0 and v.denominator == 1:
                return str(v.numerator)
            return f"({v})"
        if isinstance(node, Sym):
            return node.symbol.name
        if isinstance(node, Compl):
            return render(node.operand, _PREC_POSTFIX) + "'"
        if isinstance(node, (Mul, Quot)):
            op = "*" if isinstance(node, Mul) else "/"
            text = (
                render(node.left, _PREC_MUL) + op + render(node.right, _PREC_MUL + 1)
            )
        elif isinstance(node, (Add, Sub)):
            op = " + " if isinstance(node, Add) else " - "
            text = render(node.left, _PREC_ADD) + op + render(node.right, _PREC_ADD + 1)
        else:
            raise TypeError(f"unknown expression node {node!r}")
        if p < min_prec:
            return f"({text})"
        return text

    return render(e, _PREC_ADD)


def merge_symbol_orders(orders: Iterable[Iterable[Symbol]]) -> tuple[Symbol, ...]:
    """First-occurrence merge of several ordered symbol lists."""
    seen: dict[Symbol, None] = {}
    for order in orders:
        for s in order:
            seen.setdefault(s)
    return tuple(seen)
