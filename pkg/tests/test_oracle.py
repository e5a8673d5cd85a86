"""Set-semantics ground truth: numeric evaluation, models, verification."""

import random
from dataclasses import replace
import pytest

from elective import (
    Add,
    Compl,
    Mul,
    ONE,
    Quot,
    QuotientInOracle,
    SetAssignment,
    Sub,
    Sym,
    Universe,
    UniverseLimitExceeded,
    assignments,
    enumerate_solutions,
    eval_numeric,
    expand,
    holds,
    parse_equation,
    region,
    solve_for,
    submasks,
    verify_solved,
)
from helpers import XYZW, random_expr

x, y, z, w = XYZW
X, Y, Z, W = Sym(x), Sym(y), Sym(z), Sym(w)


def assign(m, **subsets):
    u = Universe(m)
    return SetAssignment(u, {globals()[name]: mask for name, mask in subsets.items()})


def test_universe_limits():
    assert Universe(0).subsets() == range(1)
    assert Universe(3).full == 0b111
    with pytest.raises(UniverseLimitExceeded):
        Universe(9)


def test_eval_numeric_indicator_arithmetic():
    a = assign(1, x=1, y=1)
    assert eval_numeric(Add(X, Y), a, 0) == 2
    assert eval_numeric(Mul(X, Sub(ONE, X)), a, 0) == 0
    assert eval_numeric(ONE, a, 0) == 1
    assert eval_numeric(Compl(X), a, 0) == 0


def test_eval_numeric_rejects_quotients():
    a = assign(1, x=1, y=1)
    with pytest.raises(QuotientInOracle):
        eval_numeric(Quot(Y, X), a, 0)


def test_partition_identity_holds_everywhere():
    eq = parse_equation("1 = x*y + x*y' + x'*y + x'*y'")
    for m in range(0, 5):
        u = Universe(m)
        for a in assignments(u, (x, y)):
            assert holds(eq, a)


def test_holds_pointwise():
    eq = parse_equation("x*w = y")
    assert holds(eq, assign(1, x=1, y=1, w=1))
    assert not holds(eq, assign(1, x=1, y=1, w=0))
    assert not holds(parse_equation("x + y = 1"), assign(1, x=1, y=1))


def test_region_masks():
    from elective import constituents

    a = assign(3, x=0b011, y=0b101)
    c_xy, c_xy_, c_x_y, c_x_y_ = (
        constituents((x, y))[3],
        constituents((x, y))[1],
        constituents((x, y))[2],
        constituents((x, y))[0],
    )
    assert region(c_xy, a) == 0b001
    assert region(c_xy_, a) == 0b010
    assert region(c_x_y, a) == 0b100
    assert region(c_x_y_, a) == 0b000


def test_submasks_ascending():
    assert list(submasks(0b101)) == [0b000, 0b001, 0b100, 0b101]
    assert list(submasks(0)) == [0]


def test_enumerate_solutions_examples():
    eq = parse_equation("x*w = y")
    # x covers the whole 2-element universe, y its first element:
    # the only w with x n w = y is y itself
    assert enumerate_solutions(eq, w, assign(2, x=0b11, y=0b01)) == [0b01]
    # y outside x: no solution
    assert enumerate_solutions(eq, w, assign(1, x=0b0, y=0b1)) == []
    # 1*w = x forces w = x
    assert enumerate_solutions(parse_equation("1*w = x"), w, assign(2, x=0b10)) == [
        0b10
    ]


def test_enumerate_solutions_partial_constraint():
    # x*w = x: any superset of x works
    eq = parse_equation("x*w = x")
    assert enumerate_solutions(eq, w, assign(2, x=0b01)) == [0b01, 0b11]


def test_verify_solved_flagship():
    eq = parse_equation("x*w = y")
    sol = solve_for(eq, w)
    report = verify_solved(sol, eq, 4)
    assert report.sound and report.complete
    assert report.counterexample is None


def test_verify_detects_dropped_side_condition():
    eq = parse_equation("x*w = y")
    sol = solve_for(eq, w)
    corrupted = replace(sol, side_conditions=frozenset())
    report = verify_solved(corrupted, eq, 3)
    assert not report.sound
    assert report.counterexample is not None
    assert report.counterexample.kind == "sound"


def test_verify_detects_missing_indeterminate():
    eq = parse_equation("x*w = y")
    sol = solve_for(eq, w)
    # forgetting the v-region keeps soundness but loses solutions
    corrupted = replace(sol, indeterminate=())
    report = verify_solved(corrupted, eq, 3)
    assert report.sound
    assert not report.complete
    assert report.counterexample.kind == "complete"


def test_verify_detects_wrong_inclusion():
    eq = parse_equation("x*w = y")
    sol = solve_for(eq, w)
    corrupted = replace(
        sol,
        included=sol.included | sol.excluded,
        excluded=frozenset(),
    )
    report = verify_solved(corrupted, eq, 3)
    assert not report.sound


def test_verify_size_zero_is_vacuous():
    eq = parse_equation("x*w = y")
    sol = solve_for(eq, w)
    report = verify_solved(sol, eq, 0)
    assert report.sound and report.complete


def test_master_cross_check_oracle_vs_development():
    # the developed coefficient at a constituent equals the numeric value
    # on every element of that constituent's region
    rng = random.Random(404)
    syms = (x, y, z)
    for _ in range(60):
        e = random_expr(rng, syms, depth=4)
        form = expand(e, syms)
        for m in range(0, 4):
            u = Universe(m)
            for _ in range(8):
                a = SetAssignment(
                    u, {s: rng.randrange(1 << m) for s in syms}
                )
                for element in range(m):
                    mask = 0
                    for i, s in enumerate(syms):
                        if a.subsets[s] >> element & 1:
                            mask |= 1 << i
                    assert eval_numeric(e, a, element) == form.coeff(mask)


def test_interpretable_means_every_element_is_zero_or_one():
    rng = random.Random(777)
    syms = (x, y)
    for _ in range(40):
        e = random_expr(rng, syms, depth=4)
        form = expand(e, syms)
        pointwise_class = True
        for m in range(1, 3):
            for a in assignments(Universe(m), syms):
                for element in range(m):
                    if eval_numeric(e, a, element) not in (0, 1):
                        pointwise_class = False
        assert form.is_interpretable() == pointwise_class
