"""Constituent development: frozen examples, laws, and random soundness."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from elective import (
    Add,
    Compl,
    Const,
    EmptySymbolList,
    INDETERMINATE,
    Infinite,
    InvalidSymbolList,
    LinearForm,
    Mul,
    ONE,
    Quot,
    Sub,
    Sym,
    Symbol,
    SymbolLimitExceeded,
    SymbolListMismatch,
    SymbolNotPresent,
    UninterpretableNesting,
    ZERO,
    constituents,
    eval_at,
    expand,
    format_linear_form,
)
from helpers import XYZW, oracle_vertex_value, random_expr

x, y, z, w = XYZW
X, Y, Z = Sym(x), Sym(y), Sym(z)


# ---------------------------------------------------------------------------
# constituents
# ---------------------------------------------------------------------------


def test_constituents_one_symbol():
    cs = constituents([x])
    assert [str(c) for c in cs] == ["x'", "x"]


def test_constituents_two_symbols_mask_order():
    cs = constituents([x, y])
    assert [str(c) for c in cs] == ["x'*y'", "x*y'", "x'*y", "x*y"]


def test_constituents_three_symbols_term_for_term():
    # all eight products, with the final complement product corrected to
    # run over all three symbols
    cs = constituents([x, y, z])
    assert len(cs) == 8
    assert str(cs[0]) == "x'*y'*z'"
    assert str(cs[7]) == "x*y*z"
    assert {str(c) for c in cs} == {
        "x*y*z", "x*y*z'", "x*y'*z", "x*y'*z'",
        "x'*y*z", "x'*y*z'", "x'*y'*z", "x'*y'*z'",
    }


def test_constituents_errors():
    with pytest.raises(EmptySymbolList):
        constituents([])
    with pytest.raises(SymbolLimitExceeded):
        constituents([Symbol(f"s{i}") for i in range(21)])
    with pytest.raises(InvalidSymbolList):
        constituents([x, x])


# ---------------------------------------------------------------------------
# eval_at
# ---------------------------------------------------------------------------


def test_eval_index_law_pointwise():
    assert eval_at(Mul(X, X), {x: 1}) == 1
    assert eval_at(Mul(X, X), {x: 0}) == 0


def test_eval_complement_at_own_vertex():
    assert eval_at(Sub(ONE, X), {x: 1}) == 0
    assert eval_at(Compl(X), {x: 1}) == 0


def test_eval_quotient_special_values():
    assert eval_at(Quot(Y, X), {x: 0, y: 0}) == INDETERMINATE
    assert eval_at(Quot(Y, X), {x: 0, y: 1}) == Infinite(Fraction(1))
    assert eval_at(Quot(Y, X), {x: 1, y: 1}) == 1


def test_eval_rational_arithmetic_is_exact():
    e = Quot(Const(1), Const(3))
    assert eval_at(e, {}) == Fraction(1, 3)
    assert eval_at(Add(e, e), {}) == Fraction(2, 3)


def test_eval_nonfinite_feeding_operation_raises():
    bad = Add(Quot(Y, X), ONE)
    with pytest.raises(UninterpretableNesting):
        eval_at(bad, {x: 0, y: 0})
    with pytest.raises(UninterpretableNesting):
        eval_at(Compl(Quot(Y, X)), {x: 0, y: 1})


def test_eval_missing_symbol():
    with pytest.raises(SymbolNotPresent):
        eval_at(X, {y: 1})


# ---------------------------------------------------------------------------
# expand: frozen examples
# ---------------------------------------------------------------------------


def test_expand_partition_of_unity_single_symbol():
    f = expand(Add(X, Sub(ONE, X)), [x])
    assert f.coeffs == (Fraction(1), Fraction(1))


def test_expand_sum_derived_coefficients():
    # pointwise at the four vertices: 0, 1, 1, 2
    f = expand(Add(X, Y), [x, y])
    assert f.coeffs == (Fraction(0), Fraction(1), Fraction(1), Fraction(2))


def test_expand_quotient_reproduces_special_coefficients():
    f = expand(Quot(Y, X), [x, y])
    # mask order: x'y', xy', x'y, xy
    assert f.coeffs == (
        INDETERMINATE,
        Fraction(0),
        Infinite(Fraction(1)),
        Fraction(1),
    )


def test_expand_requires_covering_symbols():
    with pytest.raises(SymbolNotPresent):
        expand(Add(X, Y), [x])


def test_expand_aggregates_offending_constituents():
    bad = Add(Quot(Y, X), ONE)
    with pytest.raises(UninterpretableNesting) as info:
        expand(bad, [x, y])
    offenders = {str(c) for c in info.value.constituents}
    assert offenders == {"x'*y'", "x'*y"}  # both x = 0 vertices


# ---------------------------------------------------------------------------
# form arithmetic
# ---------------------------------------------------------------------------


def test_form_product_respects_index_law():
    f = expand(X, [x])
    assert f * f == f


def test_form_addition_identity():
    f = expand(Add(X, Y), [x, y])
    assert f + LinearForm.zero([x, y]) == f


def test_form_distributivity_example():
    lhs = expand(Mul(X, Add(Y, Z)), [x, y, z])
    rhs = expand(Mul(X, Y), [x, y, z]) + expand(Mul(X, Z), [x, y, z])
    assert lhs == rhs


def test_form_ops_reject_mismatched_symbols():
    with pytest.raises(SymbolListMismatch):
        expand(X, [x]) + expand(Y, [y])


def test_form_ops_reject_extended_coefficients():
    f = expand(Quot(Y, X), [x, y])
    with pytest.raises(UninterpretableNesting):
        f + f


# ---------------------------------------------------------------------------
# interpretability
# ---------------------------------------------------------------------------


def test_is_interpretable():
    assert not expand(Add(X, Y), [x, y]).is_interpretable()
    union = Sub(Add(X, Y), Mul(X, Y))
    assert expand(union, [x, y]).is_interpretable()
    assert expand(ONE, [x]).is_interpretable()
    assert not expand(Quot(Y, X), [x, y]).is_interpretable()


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def test_format_linear_form_layout():
    f = expand(Quot(Y, X), [x, y])
    assert format_linear_form(f) == "1*x*y + 0*x*y' + (1/0)*x'*y + (0/0)*x'*y'"


def test_format_constant_form():
    f = expand(ONE, [x])
    assert format_linear_form(f) == "1*x + 1*x'"


def test_form_to_expr_compact():
    f = expand(Sub(Mul(X, Sub(ONE, Y)), Mul(X, Sub(ONE, Y))), [x, y])
    assert f.to_expr() == ZERO
    g = expand(Mul(Compl(X), Y), [x, y])
    assert str(g.to_expr()) == "x'*y"


# ---------------------------------------------------------------------------
# laws of the calculus
# ---------------------------------------------------------------------------


def test_partition_identities():
    for syms in ([x], [x, y], [x, y, z]):
        cs = constituents(syms)
        total = cs[0].to_expr()
        for c in cs[1:]:
            total = Add(total, c.to_expr())
        assert expand(total, syms) == LinearForm.constant(syms, 1)
        for a in cs:
            fa = expand(a.to_expr(), syms)
            assert fa * fa == fa
            for b in cs:
                if a.mask != b.mask:
                    product = expand(Mul(a.to_expr(), b.to_expr()), syms)
                    assert product.is_zero()


def test_index_law_powers():
    base = expand(X, [x])
    power = X
    for _ in range(1, 6):
        assert expand(power, [x]) == base
        power = Mul(power, X)


def test_commutativity():
    assert expand(Mul(X, Y), [x, y]) == expand(Mul(Y, X), [x, y])


def test_sum_square_identity():
    # (x + y)^2 develops the same as x + y + 2xy
    square = Mul(Add(X, Y), Add(X, Y))
    assert expand(square, [x, y]) == expand(Add(Add(X, Y), Mul(Const(2), Mul(X, Y))), [x, y])
    # and the excess over x + y is exactly 2 at the common constituent
    diff = expand(square, [x, y]) - expand(Add(X, Y), [x, y])
    assert diff.coeffs == (Fraction(0), Fraction(0), Fraction(0), Fraction(2))


def test_difference_square_identity():
    # (x - y)^2 develops the same as x + y - 2xy
    square = Mul(Sub(X, Y), Sub(X, Y))
    expected = Sub(Add(X, Y), Mul(Const(2), Mul(X, Y)))
    assert expand(square, [x, y]) == expand(expected, [x, y])


def test_expansion_soundness_random():
    rng = random.Random(1854)
    for _ in range(300):
        e = random_expr(rng, XYZW, depth=6)
        form = expand(e, XYZW)
        for c, v in form.items():
            assert v == eval_at(e, c.vertex())
            assert v == oracle_vertex_value(e, c.vertex())


_expr_leaves = st.one_of(
    st.integers(-3, 3).map(Const),
    st.sampled_from([Sym(s) for s in XYZW[:3]]),
)
_division_free = st.recursive(
    _expr_leaves,
    lambda inner: st.one_of(
        st.tuples(inner, inner).map(lambda t: Add(*t)),
        st.tuples(inner, inner).map(lambda t: Sub(*t)),
        st.tuples(inner, inner).map(lambda t: Mul(*t)),
        inner.map(Compl),
    ),
    max_leaves=20,
)


@settings(max_examples=150, deadline=None)
@given(_division_free, _division_free, st.sampled_from(["+", "-", "*"]))
def test_expansion_is_a_homomorphism(e1, e2, op):
    syms = XYZW[:3]
    node = {"+": Add, "-": Sub, "*": Mul}[op]
    combined = expand(node(e1, e2), syms)
    f1, f2 = expand(e1, syms), expand(e2, syms)
    pieces = {"+": f1 + f2, "-": f1 - f2, "*": f1 * f2}[op]
    assert combined == pieces
