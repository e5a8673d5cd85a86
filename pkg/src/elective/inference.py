"""Boole's logical method: elimination and solving by formal division.

An equation f = 0 that is division-free is linear in any unknown w once
symbols are idempotent: f = a*w + b*w' with a = f[w:=1] and b = f[w:=0].
Solving formally gives w = b / (b - a); developing that quotient over the
remaining symbols and reading each coefficient yields the class:

    1    the constituent is part of w
    0    the constituent is excluded from w
    0/0  an indeterminate part: w may contain any subset of it
    k/0, or any other value
         a side condition: the constituent must denote the empty class

Eliminating a symbol from f = 0 uses the classical residual
f[w:=1] * f[w:=0] = 0, which holds exactly when some value of w satisfies
the original equation.  Several premises combine into one equation as the
sum of their squares, which vanishes pointwise exactly where every
premise does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Constituent,
    Indeterminate,
    LinearForm,
    check_symbol_list,
    display_order,
    expand,
    normal_form,
)
from .errors import (
    EmptyPremises,
    NameCollision,
    SymbolNotPresent,
    UninterpretableNesting,
)
from .expr import (
    Add,
    Equation,
    Expr,
    Mul,
    ONE,
    Quot,
    Sub,
    Sym,
    Symbol,
    ZERO,
    contains_quotient,
    substitute,
)


@dataclass(frozen=True)
class EliminationResult:
    """A residual equation, expand-normalized, with the dropped symbol gone.

    form is the residual's development over the remaining symbols, or None
    when no symbols remain (the residual is then a constant equation).
    """

    residual: Equation
    form: LinearForm | None


@dataclass(frozen=True)
class SolvedClass:
    """The solution of one equation for one unknown.

    The four constituent groups partition the 2**n constituents of
    free_symbols.  Each indeterminate constituent carries a fresh symbol
    v1, v2, ... (numbered in ascending mask order); the unknown equals
    the included constituents plus arbitrary subsets of the indeterminate
    ones, provided every side-condition constituent is empty.
    """

    unknown: Symbol
    free_symbols: tuple[Symbol, ...]
    included: frozenset[Constituent]
    indeterminate: tuple[tuple[Symbol, Constituent], ...]
    side_conditions: frozenset[Constituent]
    excluded: frozenset[Constituent]

    def as_expr(self) -> Expr:
        """The class as an expression: included terms plus v-weighted terms."""
        terms = [c.to_expr() for c in _in_display_order(self.included)]
        terms += [Mul(Sym(v), c.to_expr()) for v, c in self.indeterminate]
        if not terms:
            return ZERO
        out = terms[0]
        for t in terms[1:]:
            out = Add(out, t)
        return out

    def describe(self) -> str:
        """One-line rendering: 'w = ...' plus side conditions if any."""
        parts = [str(c) for c in _in_display_order(self.included)]
        parts += [f"{v}*{c}" for v, c in self.indeterminate]
        text = f"{self.unknown} = " + (" + ".join(parts) if parts else "0")
        if self.side_conditions:
            conds = ", ".join(
                f"{c} = 0" for c in _in_display_order(self.side_conditions)
            )
            text += f"  where {conds}"
        return text

    def __str__(self) -> str:
        return self.describe()


def _in_display_order(group) -> tuple[Constituent, ...]:
    return display_order(tuple(group))


def equation_symbols(eq: Equation) -> tuple[Symbol, ...]:
    return eq.free_symbols()


def _division_free(f: Expr, what: str) -> None:
    if contains_quotient(f):
        raise UninterpretableNesting(f"{what} must be division-free")


def eliminate(eq: Equation, drop: Symbol) -> EliminationResult:
    """Remove one symbol from f = 0 via the residual f[1] * f[0] = 0."""
    if isinstance(drop, str):
        drop = Symbol(drop)
    syms = equation_symbols(eq)
    if drop not in syms:
        raise SymbolNotPresent(f"symbol {drop} does not occur in {eq}")
    f = eq.homogeneous()
    _division_free(f, "elimination input")
    product = Mul(substitute(f, {drop: ONE}), substitute(f, {drop: ZERO}))
    remaining = tuple(s for s in syms if s != drop)
    residual, form = normal_form(Equation(product, ZERO), remaining or None)
    return EliminationResult(residual, form)


def combine_premises(premises) -> Equation:
    """Fold several premises into one equation as a sum of squares.

    Pointwise on 0/1 vertices a sum of squares vanishes exactly where
    every summand does, so the combination is model-equivalent to the
    conjunction; squaring (rather than plain summing) prevents opposite
    signs from cancelling between premises.
    """
    premises = list(premises)
    if not premises:
        raise EmptyPremises("at least one premise equation is required")
    squares = []
    for p in premises:
        f = p.homogeneous()
        _division_free(f, "premise")
        squares.append(Mul(f, f))
    combined = squares[0]
    for s in squares[1:]:
        combined = Add(combined, s)
    return Equation(combined, ZERO)


def solve_for(eq: Equation, unknown: Symbol, syms=None) -> SolvedClass:
    """Solve a division-free equation for one unknown class.

    Forms the quotient w = b / (b - a) with a = f[w:=1], b = f[w:=0],
    develops it over the remaining symbols, and interprets each
    coefficient (1 included, 0 excluded, 0/0 indeterminate, anything
    else a side condition).

    syms, when given, fixes the ordered remaining-symbol list; it must
    cover the equation's free symbols apart from the unknown.  Otherwise
    the remaining symbols are taken in first-occurrence order.
    """
    if isinstance(unknown, str):
        unknown = Symbol(unknown)
    all_syms = equation_symbols(eq)
    if unknown not in all_syms:
        raise SymbolNotPresent(f"unknown {unknown} does not occur in {eq}")
    reserved = [s for s in all_syms if s.is_reserved]
    if reserved:
        raise NameCollision(
            f"symbols {[s.name for s in reserved]} are reserved for "
            "generated indeterminate classes (v1, v2, ...)"
        )
    f = eq.homogeneous()
    _division_free(f, "solver input")
    if syms is None:
        remaining = tuple(s for s in all_syms if s != unknown)
    else:
        remaining = check_symbol_list(syms)
        if unknown in remaining:
            raise SymbolNotPresent(
                f"the unknown {unknown} cannot be one of the remaining symbols"
            )
        missing = [s for s in all_syms if s != unknown and s not in remaining]
        if missing:
            raise SymbolNotPresent(
                f"symbols {[s.name for s in missing]} occur in the equation "
                "but not in the requested symbol list"
            )
        if any(s.is_reserved for s in remaining):
            raise NameCollision("requested symbol list uses reserved v-names")
    a = substitute(f, {unknown: ONE})
    b = substitute(f, {unknown: ZERO})
    form = expand(Quot(b, Sub(b, a)), remaining)

    included = []
    excluded = []
    indeterminate = []
    side = []
    for c, v in form.items():  # ascending mask order fixes the v-numbering
        if isinstance(v, Indeterminate):
            indeterminate.append((Symbol(f"v{len(indeterminate) + 1}"), c))
        elif isinstance(v, Fraction) and v == 1:
            included.append(c)
        elif isinstance(v, Fraction) and v == 0:
            excluded.append(c)
        else:
            side.append(c)
    return SolvedClass(
        unknown=unknown,
        free_symbols=remaining,
        included=frozenset(included),
        indeterminate=tuple(indeterminate),
        side_conditions=frozenset(side),
        excluded=frozenset(excluded),
    )


def syllogism(premises, drop=(), conclude_for: Symbol | None = None):
    """Combine premises, eliminate middle terms, optionally solve.

    Returns the final EliminationResult, or a SolvedClass when
    conclude_for is given.  Elimination proceeds left to right through
    drop; with an empty drop list the combined equation is just
    expand-normalized.
    """
    eq = combine_premises(premises)
    result = None
    for d in drop:
        result = eliminate(eq, d)
        eq = result.residual
    if conclude_for is not None:
        return solve_for(eq, conclude_for)
    if result is None:
        residual, form = normal_form(eq, equation_symbols(eq) or None)
        result = EliminationResult(residual, form)
    return result
