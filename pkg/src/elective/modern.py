"""Modern Boolean operations and the divergence analyzer.

Boole's + and - are formal: x + y develops with coefficient 2 on the
common part, and x - y with coefficient -1 on the part of y outside x,
so neither is a class in general.  The successors' calculus never leaves
{0,1}: on constituent forms union, intersection and complement are just
coefficientwise max, min and 1 - c.

The analyzer reports exactly which constituents push a development
outside {0,1} and the conditions (those constituents empty) under which
the expression denotes a class after all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Coeff, Constituent, LinearForm, expand
from .errors import NotInterpretable, SymbolListMismatch
from .expr import Expr, free_symbols


@dataclass(frozen=True)
class DivergenceReport:
    """Where and why an expression fails to denote a class."""

    expression: Expr
    offending: tuple[tuple[Constituent, Coeff], ...]
    interpretability_conditions: tuple[Constituent, ...]

    @property
    def interpretable(self) -> bool:
        return not self.offending


def _require_interpretable(f: LinearForm, name: str) -> LinearForm:
    if not f.is_interpretable():
        raise NotInterpretable(f"{name} needs coefficients in {{0, 1}}; got {f}")
    return f


def _require_same_symbols(f: LinearForm, g: LinearForm) -> None:
    if f.symbols != g.symbols:
        raise SymbolListMismatch(
            f"{[s.name for s in f.symbols]} vs {[s.name for s in g.symbols]}"
        )


def b_or(f: LinearForm, g: LinearForm) -> LinearForm:
    """Union: coefficientwise max on interpretable forms."""
    _require_interpretable(f, "b_or")
    _require_interpretable(g, "b_or")
    _require_same_symbols(f, g)
    return LinearForm(
        f.symbols, tuple(max(a, b) for a, b in zip(f.coeffs, g.coeffs))
    )


def b_and(f: LinearForm, g: LinearForm) -> LinearForm:
    """Intersection: coefficientwise min on interpretable forms."""
    _require_interpretable(f, "b_and")
    _require_interpretable(g, "b_and")
    return f * g  # min equals product on {0,1}


def b_not(f: LinearForm) -> LinearForm:
    """Complement: coefficientwise 1 - c on an interpretable form."""
    _require_interpretable(f, "b_not")
    return LinearForm(f.symbols, tuple(1 - v for v in f.coeffs))


def analyze(e: Expr, syms=None) -> DivergenceReport:
    """Develop a division-free expression and list non-{0,1} coefficients.

    Each offending constituent, forced empty, removes its own violation;
    together they are the conditions under which e denotes a class.
    """
    order = tuple(syms) if syms is not None else free_symbols(e)
    form = expand(e, order)
    offending = tuple(
        (c, v)
        for c, v in form.items()
        if not (isinstance(v, Fraction) and v in (0, 1))
    )
    return DivergenceReport(
        expression=e,
        offending=offending,
        interpretability_conditions=tuple(c for c, _ in offending),
    )
