from fractions import Fraction as F

import pytest

from nabch.cuts import (
    c_tau,
    closed_form_xmyn,
    coefficient_via_cuts,
    enumerate_bch_cuts,
    enumerate_cuts,
    xiyj_shape,
    xmyn_monomial,
)
from nabch.magma import enumerate_monomials, leaf, left_normed_power, parse
from nabch.magnus import bch_monomial

X = leaf("x")
Y = leaf("y")


# -- enumeration


def test_cuts_of_a_leaf():
    cuts = enumerate_cuts(X)
    assert len(cuts) == 1
    assert cuts[0].branches == (X,)


def test_cuts_of_xy():
    cuts = enumerate_cuts(parse("(xy)"))
    assert len(cuts) == 2
    branch_sets = {c.branches for c in cuts}
    assert (parse("(xy)"),) in branch_sets
    assert (X, Y) in branch_sets


def test_cuts_of_xxy():
    assert len(enumerate_cuts(parse("((xx)y)"))) == 3


def test_cut_grafting_recovers_monomial():
    for deg in range(1, 6):
        for m in enumerate_monomials(deg):
            for cut in enumerate_cuts(m):
                assert cut.graft() == m
                (a0, b0) = cut.positions()[0]
                assert a0 == 1
                assert cut.positions()[-1][1] == deg


def test_positions_partition_leaf_range():
    m = parse("((xx)(yy))")
    for cut in enumerate_cuts(m):
        spans = cut.positions()
        flat = [i for a, b in spans for i in range(a, b + 1)]
        assert flat == list(range(1, m.degree + 1))


def test_branch_intervals_nested_or_disjoint():
    for deg in range(1, 7):
        for m in enumerate_monomials(deg):
            intervals = [p for cut in enumerate_cuts(m) for p in cut.positions()]
            for a1, b1 in intervals:
                for a2, b2 in intervals:
                    if a1 <= b2 and a2 <= b1:  # overlapping
                        assert (a1 <= a2 and b2 <= b1) or (a2 <= a1 and b1 <= b2)


# -- BCH-cut shape


def test_xiyj_shape():
    assert xiyj_shape(X) == (1, 0)
    assert xiyj_shape(left_normed_power("y", 3)) == (0, 3)
    assert xiyj_shape(parse("(xy)")) == (1, 1)
    assert xiyj_shape(xmyn_monomial(2, 1)) == (2, 1)
    assert xiyj_shape(parse("(x(xy))")) is None
    assert xiyj_shape(parse("(yx)")) is None
    assert xiyj_shape(parse("(x(yy))")) == (1, 2)


def test_xmyn_monomial_convention():
    assert xmyn_monomial(2, 1) == parse("((xx)y)")
    assert xmyn_monomial(1, 2) == parse("(x(yy))")


def test_bch_cuts_tables():
    # table rows
    cuts = enumerate_bch_cuts(parse("(x(xy))"))
    assert {c.branches for c in cuts} == {(X, parse("(xy)")), (X, X, Y)}
    cuts = enumerate_bch_cuts(parse("(x(yx))"))
    assert {c.branches for c in cuts} == {(X, Y, X)}
    cuts = enumerate_bch_cuts(parse("((xy)x)"))
    assert {c.branches for c in cuts} == {(parse("(xy)"), X), (X, Y, X)}
    cuts = enumerate_bch_cuts(parse("((xx)y)"))
    assert {c.branches for c in cuts} == {
        (parse("((xx)y)"),),
        (parse("(xx)"), Y),
        (X, X, Y),
    }


@pytest.mark.parametrize("i", range(1, 5))
@pytest.mark.parametrize("j", range(1, 5))
def test_bch_cut_count_ij_plus_1(i, j):
    assert len(enumerate_bch_cuts(xmyn_monomial(i, j))) == i * j + 1


@pytest.mark.parametrize("i", range(1, 7))
def test_bch_cut_count_pure_powers(i):
    assert len(enumerate_bch_cuts(left_normed_power("x", i))) == i
    assert len(enumerate_bch_cuts(left_normed_power("y", i))) == i


# -- skeleton coefficients


def test_c_tau_values():
    assert c_tau(X) == 1
    assert c_tau(parse("(xx)")) == F(-1, 2)
    assert c_tau(parse("((xx)x)")) == F(1, 12)
    assert c_tau(parse("(x(xx))")) == F(1, 4)


# -- the coefficient formula


def test_coefficient_examples():
    assert coefficient_via_cuts(parse("(x(xy))")) == F(-1, 4)
    assert coefficient_via_cuts(parse("((xx)y)")) == F(1, 3)
    assert coefficient_via_cuts(parse("((xy)(xy))")) == F(-5, 24)
    assert coefficient_via_cuts(X) == 1


@pytest.mark.parametrize("deg", range(1, 7))
def test_cut_formula_matches_series(deg):
    b = bch_monomial(6)
    for m in enumerate_monomials(deg):
        assert coefficient_via_cuts(m) == b.coefficient(m), m


def test_closed_form_values():
    assert closed_form_xmyn(1, 1) == F(1, 2)
    assert closed_form_xmyn(2, 1) == F(1, 3)
    assert closed_form_xmyn(1, 2) == F(1, 2)
    with pytest.raises(ValueError):
        closed_form_xmyn(0, 1)


def test_closed_form_matches_cuts():
    for m in range(1, 7):
        for n in range(1, 7):
            if m + n > 7:
                continue
            assert closed_form_xmyn(m, n) == coefficient_via_cuts(xmyn_monomial(m, n)), (m, n)
