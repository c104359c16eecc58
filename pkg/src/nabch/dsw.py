"""Coalgebra derivations, gamma_d, and the non-associative Dynkin-Specht-Wever lemma.

For a derivation d preserving primitives, gamma_d(u) = sum u_(1) \\ d(u_(2))
satisfies d(u) = sum u_(1) gamma_d(u_(2)) and the bracket recursion

    gamma_d(u a) = eps(u) d(a) + sum <u_(1); a, gamma_d(u_(2))>

for primitive a.  Applied to the degree derivation d(u) = |u| u this turns
left-normed generator words into exact combinations of primitive
operations (:func:`bracketize_word`); applied to the substitution
derivation y d/dx it produces the tangent map of the left-normed
exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import hopf
from .magma import Monomial, is_left_normed_word, leaf, node, word_letters
from .series import Q, Series
from .suops import Gen, PrimCombo, su_bracket_expr, su_bracket_series


@dataclass(frozen=True)
class DegreeDerivation:
    """d(u) = |u| u on homogeneous u."""


@dataclass(frozen=True, eq=False)
class SubstitutionDerivation:
    """The derivation sending one generator to a fixed primitive series."""

    target: str
    value: Series


Derivation = DegreeDerivation | SubstitutionDerivation

DEGREE = DegreeDerivation()


@lru_cache(maxsize=None)
def y_partial_x(truncation: int) -> SubstitutionDerivation:
    """y d/dx at the given truncation: x -> y, y -> 0."""
    return SubstitutionDerivation("x", Series.generator("y", truncation))


def _apply_monomial(d: Derivation, m: Monomial) -> dict[Monomial, Q]:
    if isinstance(d, DegreeDerivation):
        return {m: Q(m.degree)}
    return _sub_apply(d, m)


_SUB_CACHE: dict = {}


def _sub_apply(d: SubstitutionDerivation, m: Monomial) -> dict[Monomial, Q]:
    key = (d, m)
    out = _SUB_CACHE.get(key)
    if out is not None:
        return out
    if m.is_leaf:
        out = dict(d.value.terms) if m.var == d.target else {}
    else:
        out = {}
        for t, c in _sub_apply(d, m.left).items():
            k = node(t, m.right)
            out[k] = out.get(k, Q(0)) + c
        for t, c in _sub_apply(d, m.right).items():
            k = node(m.left, t)
            out[k] = out.get(k, Q(0)) + c
    _SUB_CACHE[key] = out
    return out


def apply(d: Derivation, s: Series) -> Series:
    """Leibniz extension of d to a series; constants map to zero."""
    out: dict[Monomial, Q] = {}
    for m, c in s.terms.items():
        for t, v in _apply_monomial(d, m).items():
            if t.degree <= s.truncation:
                out[t] = out.get(t, Q(0)) + c * v
    return Series(s.truncation, out)


_GAMMA_CACHE: dict = {}


def _gamma_monomial(d: Derivation, u: Monomial) -> dict[Monomial, Q]:
    """gamma_d(u) = sum u_(1) \\ d(u_(2)) as an exact coefficient map."""
    key = (d, u)
    out = _GAMMA_CACHE.get(key)
    if out is not None:
        return out
    out = {}
    for (a, b), mult in hopf.coproduct_monomial(u).items():
        if b is None:
            continue  # d(1) = 0
        for t, c in _apply_monomial(d, b).items():
            coeff = mult * c
            if a is None:
                out[t] = out.get(t, Q(0)) + coeff
            else:
                for r, k in hopf.left_divide_monomial(a, t).items():
                    out[r] = out.get(r, Q(0)) + coeff * k
    out = {t: c for t, c in out.items() if c}
    _GAMMA_CACHE[key] = out
    return out


def gamma(d: Derivation, s: Series) -> Series:
    """Linear extension of gamma_d; gamma_d(1) = 0."""
    out: dict[Monomial, Q] = {}
    for m, c in s.terms.items():
        for t, v in _gamma_monomial(d, m).items():
            if t.degree <= s.truncation:
                out[t] = out.get(t, Q(0)) + c * v
    return Series(s.truncation, out)


def dsw_identity_check(u, a: str, d: Derivation, truncation: int | None = None) -> bool:
    """Evaluate both sides of the bracket recursion exactly; u may be None (the unit)."""
    ga = leaf(a)
    deg_u = 0 if u is None else u.degree
    n = truncation if truncation is not None else max(deg_u + 1, 2)
    a_series = Series.generator(a, n)
    if u is None:
        lhs = gamma(d, a_series)
        rhs = apply(d, a_series)
        return lhs == rhs
    lhs = gamma(d, Series.monomial(node(u, ga), n))
    rhs = Series.zero(n)  # eps(u) = 0 for a monomial u
    for (p, q), mult in hopf.coproduct_monomial(u).items():
        if q is None:
            continue  # gamma_d(1) = 0
        gq = Series(n, _gamma_monomial(d, q))
        if gq.is_zero():
            continue
        p_series_arg = Series.one(n) if p is None else Series.monomial(p, n)
        rhs = rhs + mult * su_bracket_series(p_series_arg, a_series, gq)
    return lhs == rhs


@lru_cache(maxsize=None)
def _bracketize(letters: tuple[str, ...]) -> PrimCombo:
    if len(letters) == 1:
        return PrimCombo.single(Gen(letters[0]))
    init, last = letters[:-1], letters[-1]
    out = PrimCombo()
    k = len(init)
    # Sweedler components of a left-normed word are the subword pairs
    for mask in range(1 << k):
        prefix = tuple(init[i] for i in range(k) if mask >> i & 1)
        rest = tuple(init[i] for i in range(k) if not mask >> i & 1)
        if not rest:
            continue  # gamma_d(1) = 0
        inner = _bracketize(rest)
        pref_exprs = tuple(Gen(g) for g in prefix)
        for e, c in inner.terms.items():
            out = out + PrimCombo.single(su_bracket_expr(pref_exprs, Gen(last), e), c)
    return out


def bracketize_word(w: Monomial, d: Derivation = DEGREE) -> PrimCombo:
    """Symbolic gamma_d(w) for a left-normed generator word w, degree derivation only.

    eval_prim of the result equals gamma(DEGREE, w) exactly.
    """
    if not isinstance(d, DegreeDerivation):
        raise ValueError("symbolic bracketization is defined for the degree derivation")
    if not is_left_normed_word(w):
        raise ValueError(f"{w!r} is not a left-normed word of generators")
    return _bracketize(word_letters(w))
