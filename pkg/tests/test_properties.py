"""Hypothesis property tests over randomly generated monomials and series."""

from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from nabch.hopf import coproduct, coproduct_monomial, is_primitive
from nabch.magma import compare, format_monomial, leaf, node, parse
from nabch.series import Series, project_associative, substitute
from nabch.suops import su_bracket


def monomials(max_degree=4):
    leaves = st.sampled_from(["x", "y"]).map(leaf)
    return st.recursive(
        leaves,
        lambda children: st.tuples(children, children).map(lambda p: node(*p)),
        max_leaves=max_degree,
    )


def rationals():
    return st.builds(F, st.integers(-6, 6), st.integers(1, 5))


def series(truncation=4, max_degree=4):
    return st.dictionaries(monomials(max_degree), rationals(), min_size=1, max_size=4).map(
        lambda terms: Series(truncation, terms)
    )


@given(monomials(6))
def test_parse_format_round_trip(m):
    assert parse(format_monomial(m)) == m


@given(monomials(5), monomials(5))
def test_compare_antisymmetric(a, b):
    assert compare(a, b) == -compare(b, a)
    if compare(a, b) == 0:
        assert a == b


@given(monomials(5), monomials(5), monomials(5))
def test_compare_transitive(a, b, c):
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0


@given(monomials(4))
def test_coproduct_term_count(m):
    # one Sweedler pair per leaf subset
    assert sum(coproduct_monomial(m).values()) == 2**m.degree


@settings(max_examples=25, deadline=None)
@given(series(), series())
def test_projection_is_multiplicative(s, t):
    assert project_associative(s * t) == project_associative(s) * project_associative(t)


@settings(max_examples=25, deadline=None)
@given(series(), series())
def test_coproduct_is_multiplicative(s, t):
    assert coproduct(s * t) == coproduct(s) * coproduct(t)


@settings(max_examples=20, deadline=None)
@given(series())
def test_coproduct_cocommutative(s):
    d = coproduct(s).terms
    assert d == {(b, a): c for (a, b), c in d.items()}


@settings(max_examples=20, deadline=None)
@given(series(truncation=4, max_degree=2), series(truncation=4, max_degree=2))
def test_bracket_antisymmetric_in_tail(u, v):
    assert (su_bracket([u], u, v) + su_bracket([u], v, u)).is_zero()


@settings(max_examples=15, deadline=None)
@given(series(truncation=5, max_degree=2))
def test_substitute_into_single_power(u):
    # substituting into the bare generator is the identity
    u = u - Series(u.truncation, constant=u.constant)
    f = Series.generator("x", u.truncation)
    assert substitute(f, u) == u


@settings(max_examples=10, deadline=None)
@given(series(truncation=4, max_degree=2), series(truncation=4, max_degree=2))
def test_commutator_of_primitive_parts(s, t):
    # the commutator of primitive series is primitive
    sp = Series(4, {m: c for m, c in s.terms.items() if m.degree == 1})
    tp = Series(4, {m: c for m, c in t.terms.items() if m.degree == 1})
    assert is_primitive(sp * tp - tp * sp)
