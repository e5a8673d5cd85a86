"""Constituent normal form and exact coefficient arithmetic.

Over an ordered list of n symbols the universe splits into 2**n
constituents: products that take, for every symbol, either the symbol or
its complement.  Constituents are pairwise-disjoint idempotents that sum
to 1, so every expression develops uniquely into

    f  =  sum over constituents C of  f(vertex of C) * C

where the vertex of C assigns 1 to each plain factor and 0 to each
complemented one.  This module computes that development by direct
pointwise evaluation at the 0/1 vertices, which makes the index law
(x**n = x), distributivity and commutativity hold by construction.

Coefficients are exact rationals (fractions.Fraction).  Developing a
quotient can additionally produce the two extended values 0/0
(Indeterminate) and k/0 (Infinite); both are terminal: they may sit in a
developed form but never feed further arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import (
    EmptySymbolList,
    InvalidSymbolList,
    SymbolLimitExceeded,
    SymbolListMismatch,
    SymbolNotPresent,
    UninterpretableNesting,
)
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
    free_symbols,
)

MAX_SYMBOLS = 20


@dataclass(frozen=True)
class Indeterminate:
    """The 0/0 coefficient: an arbitrary (indeterminate) part of a class."""

    def __str__(self) -> str:
        return "0/0"


@dataclass(frozen=True)
class Infinite:
    """A k/0 coefficient with k != 0: satisfiable only by the empty class."""

    numerator: Fraction

    def __post_init__(self):
        if not isinstance(self.numerator, Fraction):
            object.__setattr__(self, "numerator", Fraction(self.numerator))
        if self.numerator == 0:
            raise ValueError("Infinite coefficient requires a non-zero numerator")

    def __str__(self) -> str:
        k = self.numerator
        if k.denominator == 1:
            return f"{k.numerator}/0"
        return f"({k})/0"


INDETERMINATE = Indeterminate()

# A developed coefficient: finite exact rational, 0/0, or k/0.
Coeff = Union[Fraction, Indeterminate, Infinite]


def coeff_text(c: Coeff) -> str:
    """Plain text of a coefficient: '2', '-1', '1/2', '0/0', '1/0'."""
    return str(c)


def coeff_factor_text(c: Coeff) -> str:
    """Coefficient text for use before '*'; specials get parentheses."""
    if isinstance(c, Fraction) and c >= 0 and c.denominator == 1:
        return str(c.numerator)
    return f"({coeff_text(c)})"


def check_symbol_list(syms) -> tuple[Symbol, ...]:
    """Validate an ordered symbol list: non-empty, unique, within the cap."""
    out = tuple(Symbol(s) if isinstance(s, str) else s for s in syms)
    if not out:
        raise EmptySymbolList("a constituent basis needs at least one symbol")
    if len(out) > MAX_SYMBOLS:
        raise SymbolLimitExceeded(
            f"{len(out)} symbols exceed the cap of {MAX_SYMBOLS} "
            f"(2**{len(out)} constituents)"
        )
    if len(set(out)) != len(out):
        raise InvalidSymbolList(f"duplicate symbols in {[s.name for s in out]}")
    return out


@dataclass(frozen=True)
class Constituent:
    """One region of the 2**n-fold partition of the universe.

    Bit i of mask set means the product takes symbols[i]; clear means it
    takes the complement (1 - symbols[i]).
    """

    symbols: tuple[Symbol, ...]
    mask: int

    def takes(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def vertex(self) -> dict[Symbol, int]:
        """The 0/1 point at which this constituent's factor product is 1."""
        return {s: self.mask >> i & 1 for i, s in enumerate(self.symbols)}

    def display_rank(self) -> int:
        # Reads the mask with the first symbol as the most significant bit,
        # so descending rank reproduces the traditional development layout
        # (for two symbols: xy, xy', x'y, x'y').
        n = len(self.symbols)
        return sum((self.mask >> i & 1) << (n - 1 - i) for i in range(n))

    def factors(self) -> list[Expr]:
        return [
            Sym(s) if self.takes(i) else Compl(Sym(s))
            for i, s in enumerate(self.symbols)
        ]

    def to_expr(self) -> Expr:
        factors = self.factors()
        out: Expr = factors[0]
        for f in factors[1:]:
            out = Mul(out, f)
        return out

    def __str__(self) -> str:
        return "*".join(
            s.name if self.takes(i) else f"{s.name}'"
            for i, s in enumerate(self.symbols)
        )


def constituents(syms) -> tuple[Constituent, ...]:
    """All 2**n constituents over an ordered symbol list, ascending mask."""
    order = check_symbol_list(syms)
    return tuple(Constituent(order, m) for m in range(1 << len(order)))


def display_order(items: tuple[Constituent, ...]) -> tuple[Constituent, ...]:
    """Constituents in the traditional layout: all-plain first."""
    return tuple(sorted(items, key=lambda c: c.display_rank(), reverse=True))


def eval_at(e: Expr, vertex: Mapping[Symbol, int]) -> Coeff:
    """Evaluate an expression at a 0/1 vertex with exact arithmetic.

    A quotient whose denominator evaluates to 0 yields 0/0 when the
    numerator is 0 and k/0 otherwise.  Those values are terminal: if one
    feeds any further operation the expression has no development and
    UninterpretableNesting is raised.
    """

    def ev(node: Expr) -> Coeff:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Sym):
            try:
                return Fraction(vertex[node.symbol])
            except KeyError:
                raise SymbolNotPresent(
                    f"vertex does not assign symbol {node.symbol}"
                ) from None
        if isinstance(node, Compl):
            v = ev(node.operand)
            _require_finite(v, "complement")
            return 1 - v
        left = ev(node.left)
        right = ev(node.right)
        if isinstance(node, Quot):
            _require_finite(left, "quotient numerator")
            _require_finite(right, "quotient denominator")
            if right == 0:
                return INDETERMINATE if left == 0 else Infinite(left)
            return left / right
        op = {Add: "sum", Sub: "difference", Mul: "product"}[type(node)]
        _require_finite(left, op)
        _require_finite(right, op)
        if isinstance(node, Add):
            return left + right
        if isinstance(node, Sub):
            return left - right
        return left * right

    return ev(e)


def _require_finite(v: Coeff, context: str) -> None:
    if not isinstance(v, Fraction):
        raise UninterpretableNesting(
            f"{v} cannot be an operand of a {context}; "
            "0/0 and k/0 are terminal values"
        )


@dataclass(frozen=True)
class LinearForm:
    """A total map from the 2**n constituents to developed coefficients.

    coeffs[m] is the coefficient of the constituent with mask m.  For a
    division-free source expression every coefficient is a Fraction, and
    the coefficient at each constituent equals the pointwise value of the
    source at that constituent's vertex (the defining property).
    """

    symbols: tuple[Symbol, ...]
    coeffs: tuple[Coeff, ...]

    def __post_init__(self):
        if len(self.coeffs) != 1 << len(self.symbols):
            raise ValueError(
                f"expected {1 << len(self.symbols)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def constant(cls, syms, value) -> "LinearForm":
        order = check_symbol_list(syms)
        return cls(order, (Fraction(value),) * (1 << len(order)))

    @classmethod
    def zero(cls, syms) -> "LinearForm":
        return cls.constant(syms, 0)

    def constituents(self) -> tuple[Constituent, ...]:
        return tuple(Constituent(self.symbols, m) for m in range(len(self.coeffs)))

    def coeff(self, c: Constituent | int) -> Coeff:
        mask = c.mask if isinstance(c, Constituent) else c
        return self.coeffs[mask]

    def items(self) -> Iterator[tuple[Constituent, Coeff]]:
        """(constituent, coefficient) pairs in ascending mask order."""
        for m, value in enumerate(self.coeffs):
            yield Constituent(self.symbols, m), value

    def display_items(self) -> tuple[tuple[Constituent, Coeff], ...]:
        """(constituent, coefficient) pairs in the traditional layout."""
        return tuple(
            (c, self.coeffs[c.mask]) for c in display_order(self.constituents())
        )

    def is_interpretable(self) -> bool:
        """True iff every coefficient is 0 or 1, i.e. the form is a class."""
        return all(
            isinstance(v, Fraction) and v in (0, 1) for v in self.coeffs
        )

    def is_zero(self) -> bool:
        return all(isinstance(v, Fraction) and v == 0 for v in self.coeffs)

    def _combine(self, other: "LinearForm", op) -> "LinearForm":
        if not isinstance(other, LinearForm):
            return NotImplemented
        if self.symbols != other.symbols:
            raise SymbolListMismatch(
                f"{[s.name for s in self.symbols]} vs "
                f"{[s.name for s in other.symbols]}"
            )
        for v in (*self.coeffs, *other.coeffs):
            _require_finite(v, "form combination")
        return LinearForm(
            self.symbols,
            tuple(op(a, b) for a, b in zip(self.coeffs, other.coeffs)),
        )

    # Constituents are pairwise-orthogonal idempotents, so sums,
    # differences and products of forms are all coefficientwise.
    def __add__(self, other: "LinearForm") -> "LinearForm":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other: "LinearForm") -> "LinearForm":
        return self._combine(other, lambda a, b: a * b)

    def to_expr(self) -> Expr:
        """Compact expression: non-zero terms in display order, 0 if none."""
        terms = []
        for c, v in self.display_items():
            _require_finite(v, "expression rebuild")
            if v == 0:
                continue
            if v == 1:
                terms.append(c.to_expr())
            else:
                term: Expr = Const(v)
                for f in c.factors():
                    term = Mul(term, f)
                terms.append(term)
        if not terms:
            return ZERO
        out = terms[0]
        for t in terms[1:]:
            out = Add(out, t)
        return out

    def __str__(self) -> str:
        return format_linear_form(self)


def expand(e: Expr, syms) -> LinearForm:
    """Develop an expression over an ordered symbol list.

    The coefficient at each constituent is the pointwise evaluation of e
    at that constituent's vertex.  Evaluation failures (extended values
    feeding further arithmetic) are aggregated and reported with the
    offending constituents.
    """
    order = check_symbol_list(syms)
    missing = [s for s in free_symbols(e) if s not in order]
    if missing:
        raise SymbolNotPresent(
            f"symbols {[s.name for s in missing]} occur in the expression "
            f"but not in {[s.name for s in order]}"
        )
    coeffs = []
    failures = []
    for c in constituents(order):
        try:
            coeffs.append(eval_at(e, c.vertex()))
        except UninterpretableNesting as err:
            failures.append((c, err))
    if failures:
        where = ", ".join(str(c) for c, _ in failures)
        raise UninterpretableNesting(
            f"development failed at {where}: {failures[0][1]}",
            constituents=tuple(c for c, _ in failures),
        )
    return LinearForm(order, tuple(coeffs))


def format_linear_form(f: LinearForm) -> str:
    """Full development as text, every constituent shown, display order."""
    return " + ".join(
        f"{coeff_factor_text(v)}*{c}" for c, v in f.display_items()
    )


def normal_form(eq: Equation, syms=None) -> tuple[Equation, LinearForm | None]:
    """Expand-normalize an equation to (compact form) = 0.

    When no symbols remain (a closed equation) the homogeneous side is
    evaluated outright and returned as a constant equation with no form.
    """
    f = eq.homogeneous()
    order = tuple(syms) if syms is not None else free_symbols(f)
    if not order:
        value = eval_at(f, {})
        _require_finite(value, "closed evaluation")
        return Equation(Const(value), ZERO), None
    form = expand(f, order)
    return Equation(form.to_expr(), ZERO), form
