"""Shared random generators and oracle shortcuts for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from elective import (
    Add,
    Compl,
    Const,
    Expr,
    Mul,
    Quot,
    SetAssignment,
    Sub,
    Sym,
    Symbol,
    Universe,
    constituents,
    eval_numeric,
)

XYZW = tuple(Symbol(n) for n in "xyzw")


def random_expr(
    rng: random.Random,
    syms: tuple[Symbol, ...] = XYZW,
    depth: int = 6,
    allow_quot: bool = False,
) -> Expr:
    """A random expression tree: constants in [-3, 3], given symbols."""
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.4:
            return Const(rng.randint(-3, 3))
        return Sym(rng.choice(syms))
    ops = ["add", "sub", "mul", "mul", "compl"]
    if allow_quot:
        ops.append("quot")
    op = rng.choice(ops)
    if op == "compl":
        return Compl(random_expr(rng, syms, depth - 1, allow_quot))
    left = random_expr(rng, syms, depth - 1, allow_quot)
    right = random_expr(rng, syms, depth - 1, allow_quot)
    node = {"add": Add, "sub": Sub, "mul": Mul, "quot": Quot}[op]
    return node(left, right)


def oracle_vertex_value(e: Expr, vertex: dict[Symbol, int]) -> Fraction:
    """Pointwise value of e at a 0/1 vertex, via the set oracle.

    Independent of the algebra module: the vertex becomes a one-element
    universe where each symbol is either the full set or the empty set.
    """
    a = SetAssignment(Universe(1), {s: bit for s, bit in vertex.items()})
    return eval_numeric(e, a, 0)


def random_interpretable_expr(
    rng: random.Random, syms: tuple[Symbol, ...]
) -> Expr:
    """A random {0,1}-valued expression: a sum of distinct constituents."""
    picked = [c for c in constituents(syms) if rng.random() < 0.5]
    if not picked:
        return Const(0)
    out: Expr = picked[0].to_expr()
    for c in picked[1:]:
        out = Add(out, c.to_expr())
    return out
