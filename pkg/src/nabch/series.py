"""Truncated formal power series over exact rationals in the free magma algebra.

A :class:`Series` models k{{x,y}} modulo terms of degree > N: a sparse map
monomial -> Fraction plus an explicit constant term.  :class:`AssocSeries` is
the associative counterpart on flat words, used for the Dynkin cross-check.

Convention fixed here and relied on by every downstream coefficient:
Bernoulli numbers use B_1 = -1/2 (the "first" convention, from the defining
recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0).  The other convention silently
breaks the tree-indexed logarithm.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from math import comb, factorial

from .magma import (
    Monomial,
    enumerate_monomials,
    leaf,
    monomial_from_json,
    monomial_to_json,
    node,
    word_letters,
)

Q = Fraction


class TruncationMismatchWarning(UserWarning):
    """Operands carried different truncation degrees; the minimum was used."""


def _join_truncation(a: int, b: int) -> int:
    if a != b:
        warnings.warn(
            f"mixing truncations {a} and {b}; result truncated at {min(a, b)}",
            TruncationMismatchWarning,
            stacklevel=3,
        )
    return min(a, b)


class Series:
    """Sparse truncated series; immutable by convention."""

    __slots__ = ("truncation", "constant", "terms")

    def __init__(self, truncation: int, terms=None, constant=0):
        if truncation < 1:
            raise ValueError("truncation degree must be >= 1")
        self.truncation = truncation
        self.constant = Q(constant)
        clean: dict[Monomial, Q] = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                if m.degree > truncation:
                    continue
                c = Q(c)
                if c:
                    prev = clean.get(m)
                    if prev is None:
                        clean[m] = c
                    elif prev + c:
                        clean[m] = prev + c
                    else:
                        del clean[m]
        self.terms = clean

    @classmethod
    def zero(cls, truncation: int) -> "Series":
        return cls(truncation)

    @classmethod
    def one(cls, truncation: int) -> "Series":
        return cls(truncation, constant=1)

    @classmethod
    def generator(cls, var: str, truncation: int) -> "Series":
        return cls(truncation, {leaf(var): Q(1)})

    @classmethod
    def monomial(cls, m: Monomial, truncation: int, coeff=1) -> "Series":
        return cls(truncation, {m: Q(coeff)})

    def coefficient(self, m: Monomial) -> Q:
        """Stored coefficient or 0; queries above the truncation are unreliable
        and therefore rejected."""
        if m.degree > self.truncation:
            raise ValueError(
                f"degree {m.degree} exceeds truncation {self.truncation}; coefficient unknown"
            )
        return self.terms.get(m, Q(0))

    def items(self):
        """(monomial, coefficient) pairs in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].key)

    def is_zero(self) -> bool:
        return not self.terms and not self.constant

    def min_degree(self):
        """Smallest degree present, 0 for the constant; None if zero."""
        if self.constant:
            return 0
        if not self.terms:
            return None
        return min(m.degree for m in self.terms)

    def homogeneous(self, d: int) -> "Series":
        if d == 0:
            return Series(self.truncation, constant=self.constant)
        return Series(self.truncation, {m: c for m, c in self.terms.items() if m.degree == d})

    def truncate(self, n: int) -> "Series":
        return Series(n, {m: c for m, c in self.terms.items() if m.degree <= n}, self.constant)

    def map_monomials(self, f) -> "Series":
        """Linear extension of a monomial map f: Monomial -> Monomial."""
        out: dict[Monomial, Q] = {}
        for m, c in self.terms.items():
            t = f(m)
            out[t] = out.get(t, Q(0)) + c
        return Series(self.truncation, out, self.constant)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.constant == other.constant
            and self.terms == other.terms
        )

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = _join_truncation(self.truncation, other.truncation)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Q(0)) + c
        return Series(n, out, self.constant + other.constant)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Series(self.truncation, {m: -c for m, c in self.terms.items()}, -self.constant)

    def __mul__(self, other):
        if isinstance(other, Series):
            n = _join_truncation(self.truncation, other.truncation)
            return _mul(self, other, n)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def __truediv__(self, other):
        return self._scale(Q(1, 1) / Q(other))

    def _scale(self, c) -> "Series":
        c = Q(c)
        if not c:
            return Series(self.truncation)
        return Series(
            self.truncation, {m: c * v for m, v in self.terms.items()}, c * self.constant
        )

    def __repr__(self):
        return format_series(self)

    __hash__ = None


def _mul(a: Series, b: Series, n: int) -> Series:
    out: dict[Monomial, Q] = {}
    ca, cb = a.constant, b.constant
    if ca:
        for m, c in b.terms.items():
            if m.degree <= n:
                out[m] = out.get(m, Q(0)) + ca * c
    if cb:
        for m, c in a.terms.items():
            if m.degree <= n:
                out[m] = out.get(m, Q(0)) + cb * c
    for ma, va in a.terms.items():
        da = ma.degree
        if da >= n:
            continue
        for mb, vb in b.terms.items():
            if da + mb.degree <= n:
                m = node(ma, mb)
                out[m] = out.get(m, Q(0)) + va * vb
    return Series(n, out, ca * cb)


def mono_mul(m: Monomial, s: Series) -> Series:
    """m * s, the monomial acting on the left."""
    out = {node(m, t): c for t, c in s.terms.items() if m.degree + t.degree <= s.truncation}
    if s.constant and m.degree <= s.truncation:
        out[m] = out.get(m, Q(0)) + s.constant
    return Series(s.truncation, out)


def mul_mono(s: Series, m: Monomial) -> Series:
    """s * m, the monomial acting on the right."""
    out = {node(t, m): c for t, c in s.terms.items() if m.degree + t.degree <= s.truncation}
    if s.constant and m.degree <= s.truncation:
        out[m] = out.get(m, Q(0)) + s.constant
    return Series(s.truncation, out)


def left_normed_product(factors) -> Series:
    """((f1 f2) f3) ... fk of a nonempty sequence of series."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty product has no Series home; use the unit explicitly")
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# Bernoulli numbers and the tree-indexed logarithm coefficients.

_BERNOULLI: list[Q] = [Q(1)]


def bernoulli(n: int) -> Q:
    """B_n in the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    while len(_BERNOULLI) <= n:
        k = len(_BERNOULLI)
        acc = Q(0)
        for i, b in enumerate(_BERNOULLI):
            acc += comb(k + 1, i) * b
        _BERNOULLI.append(-acc / (k + 1))
    return _BERNOULLI[n]


def bernoulli_table(n: int) -> list[Q]:
    """B_0 .. B_n."""
    bernoulli(n)
    return _BERNOULLI[: n + 1]


def _one_variable(m: Monomial) -> None:
    if len(m.vars) != 1:
        raise ValueError(f"{m!r} mixes generators; a one-variable monomial is required")


def _spine(m: Monomial) -> list[Monomial]:
    """tau_1 .. tau_k of the unique decomposition (((v tau_1) tau_2) ...) tau_k."""
    parts = []
    while not m.is_leaf:
        parts.append(m.right)
        m = m.left
    parts.reverse()
    return parts


_TAU_FACT: dict[Monomial, int] = {}
_B_TAU: dict[Monomial, Q] = {}


def tau_factorial(m: Monomial) -> int:
    """tau! = k! tau_1! ... tau_k! over the left-spine decomposition; x! = 1."""
    _one_variable(m)
    out = _TAU_FACT.get(m)
    if out is None:
        parts = _spine(m)
        out = factorial(len(parts))
        for p in parts:
            out *= tau_factorial(p)
        _TAU_FACT[m] = out
    return out


def b_tau(m: Monomial) -> Q:
    """B_tau = B_k B_{tau_1} ... B_{tau_k}; B_x = 1."""
    _one_variable(m)
    out = _B_TAU.get(m)
    if out is None:
        parts = _spine(m)
        out = bernoulli(len(parts))
        for p in parts:
            out *= b_tau(p)
        _B_TAU[m] = out
    return out


_LOG_SERIES: dict[int, Series] = {}


def log_l_series(n: int) -> Series:
    """log_l(1+x) = sum_tau (B_tau / tau!) tau, truncated at degree n."""
    out = _LOG_SERIES.get(n)
    if out is None:
        terms = {}
        for d in range(1, n + 1):
            for m in enumerate_monomials(d, ("x",)):
                c = b_tau(m) / tau_factorial(m)
                if c:
                    terms[m] = c
        out = Series(n, terms)
        _LOG_SERIES[n] = out
    return out


# ---------------------------------------------------------------------------
# Substitution, exponentials, logarithm.


def substitute(f: Series, u: Series) -> Series:
    """Replace every leaf of f's (one-variable) monomials by u, multilinearly.

    u must have zero constant term; f's constant passes through.
    """
    if u.constant:
        raise ValueError("substitution target must have zero constant term")
    fvars = set()
    for m in f.terms:
        fvars.update(m.vars)
    if len(fvars) > 1:
        raise ValueError("substitution source must be a one-variable series")
    n = _join_truncation(f.truncation, u.truncation)
    memo: dict = {}
    out: dict[Monomial, Q] = {}
    for m, c in f.terms.items():
        for t, v in _subst(m, n, u, memo).items():
            out[t] = out.get(t, Q(0)) + c * v
    return Series(n, out, f.constant)


def _subst(m: Monomial, budget: int, u: Series, memo: dict) -> dict[Monomial, Q]:
    # every leaf contributes at least degree 1, so a subtree's budget is the
    # total minus its siblings' leaf counts
    if budget < m.degree:
        return {}
    key = (m, budget)
    got = memo.get(key)
    if got is not None:
        return got
    if m.is_leaf:
        out = {t: c for t, c in u.terms.items() if t.degree <= budget}
    else:
        dl = _subst(m.left, budget - m.right.degree, u, memo)
        dr = _subst(m.right, budget - m.left.degree, u, memo)
        out = {}
        for a, ca in dl.items():
            da = a.degree
            for b, cb in dr.items():
                if da + b.degree <= budget:
                    t = node(a, b)
                    out[t] = out.get(t, Q(0)) + ca * cb
    memo[key] = out
    return out


def _exp(p, n, power_step) -> Series:
    if isinstance(p, str):
        p = Series.generator(p, n)
    if p.constant:
        raise ValueError("exponential argument must have zero constant term")
    if p.truncation != n:
        p = p.truncate(min(p.truncation, n))
        n = p.truncation
    out = Series.one(n)
    pw = Series.one(n)
    fact = 1
    for k in range(1, n + 1):
        pw = power_step(pw, p)
        if pw.is_zero():
            break
        fact *= k
        out = out + pw / fact
    return out


def exp_l(p, n: int) -> Series:
    """sum 1/k! (((pp)p)...)p, the left-normed exponential."""
    return _exp(p, n, lambda pw, p_: pw * p_)


def exp_r(p, n: int) -> Series:
    """sum 1/k! p(p(...(pp))), the right-normed exponential."""
    return _exp(p, n, lambda pw, p_: p_ * pw)


def log_l(s: Series, n: int | None = None) -> Series:
    """Compositional inverse of exp_l: substitute log_l(1+x) into s - 1."""
    if n is None:
        n = s.truncation
    if s.constant != 1:
        raise ValueError("log_l needs constant term 1")
    u = (s - Series.one(s.truncation)).truncate(min(n, s.truncation))
    return substitute(log_l_series(u.truncation), u)


# ---------------------------------------------------------------------------
# Associative projection and the Dynkin series.


class AssocSeries:
    """Truncated series on flat words over {x, y}."""

    __slots__ = ("truncation", "constant", "terms")

    def __init__(self, truncation: int, terms=None, constant=0):
        if truncation < 1:
            raise ValueError("truncation degree must be >= 1")
        self.truncation = truncation
        self.constant = Q(constant)
        clean: dict[str, Q] = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if len(w) > truncation:
                    continue
                c = Q(c)
                if c:
                    prev = clean.get(w, Q(0)) + c
                    if prev:
                        clean[w] = prev
                    elif w in clean:
                        del clean[w]
        self.terms = clean

    @classmethod
    def zero(cls, truncation: int) -> "AssocSeries":
        return cls(truncation)

    def coefficient(self, w: str) -> Q:
        if len(w) > self.truncation:
            raise ValueError(f"word length {len(w)} exceeds truncation {self.truncation}")
        return self.terms.get(w, Q(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self.terms and not self.constant

    def __eq__(self, other):
        if not isinstance(other, AssocSeries):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.constant == other.constant
            and self.terms == other.terms
        )

    def __add__(self, other):
        n = _join_truncation(self.truncation, other.truncation)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Q(0)) + c
        return AssocSeries(n, out, self.constant + other.constant)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, AssocSeries):
            n = _join_truncation(self.truncation, other.truncation)
            out: dict[str, Q] = {}
            if self.constant:
                for w, c in other.terms.items():
                    out[w] = out.get(w, Q(0)) + self.constant * c
            if other.constant:
                for w, c in self.terms.items():
                    out[w] = out.get(w, Q(0)) + other.constant * c
            for wa, ca in self.terms.items():
                for wb, cb in other.terms.items():
                    if len(wa) + len(wb) <= n:
                        w = wa + wb
                        out[w] = out.get(w, Q(0)) + ca * cb
            return AssocSeries(n, out, self.constant * other.constant)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, c) -> "AssocSeries":
        c = Q(c)
        return AssocSeries(
            self.truncation, {w: c * v for w, v in self.terms.items()}, c * self.constant
        )

    def __repr__(self):
        return format_assoc_series(self)

    __hash__ = None


_WORD: dict[Monomial, str] = {}


def _word(m: Monomial) -> str:
    w = _WORD.get(m)
    if w is None:
        w = "".join(word_letters(m))
        _WORD[m] = w
    return w


def project_associative(s: Series) -> AssocSeries:
    """Forget parentheses; a unital algebra homomorphism onto k<<x,y>>."""
    out: dict[str, Q] = {}
    for m, c in s.terms.items():
        w = _word(m)
        out[w] = out.get(w, Q(0)) + c
    return AssocSeries(s.truncation, out, s.constant)


def _gamma_word(word: str, n: int) -> dict[str, Q]:
    """gamma(l1...lk) = [...[[l1,l2],l3]...,lk] expanded into words."""
    out = {word[0]: Q(1)}
    for ch in word[1:]:
        nxt: dict[str, Q] = {}
        for w, c in out.items():
            if len(w) + 1 <= n:
                nxt[w + ch] = nxt.get(w + ch, Q(0)) + c
                nxt[ch + w] = nxt.get(ch + w, Q(0)) - c
        out = nxt
    return out


def _compositions_of(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions_of(total - first, parts - 1):
            yield (first,) + rest


def dynkin_bch(n: int) -> AssocSeries:
    """The classical Dynkin expansion of log(exp(x)exp(y)) in the word basis.

    Independent of the non-associative pipeline; used as its projection
    oracle.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    out: dict[str, Q] = {}
    for total in range(1, n + 1):
        for blocks in range(1, total + 1):
            for comp in _compositions_of(total, blocks):
                # split each block p into x^r y^s with r + s = p
                choices = [[(r, p - r) for r in range(p + 1)] for p in comp]
                for pick in _product(choices):
                    coeff = Q((-1) ** (blocks - 1), blocks) / total
                    word = ""
                    for r, s in pick:
                        coeff /= factorial(r) * factorial(s)
                        word += "x" * r + "y" * s
                    for w, c in _gamma_word(word, n).items():
                        out[w] = out.get(w, Q(0)) + coeff * c
    return AssocSeries(n, out)


def _product(choices):
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for rest in _product(choices[1:]):
            yield (head,) + rest


# ---------------------------------------------------------------------------
# Rendering and JSON.


def format_coeff(c: Q) -> str:
    return str(c)


def parse_coeff(text) -> Q:
    return Q(text)


def _render_terms(pairs, render_key, latex: bool) -> str:
    chunks = []
    for key, c in pairs:
        neg = c < 0
        mag = -c if neg else c
        if key is None:
            body = _coeff_str(mag, latex)
        else:
            cs = "" if mag == 1 else _coeff_str(mag, latex)
            sep = "" if latex or not cs else " "
            body = f"{cs}{sep}{render_key(key)}"
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks) if chunks else "0"


def _coeff_str(c: Q, latex: bool) -> str:
    if latex and c.denominator != 1:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return str(c)


def format_series(s: Series, style: str = "compact") -> str:
    latex = style == "latex"
    pairs = []
    if s.constant:
        pairs.append((None, s.constant))
    pairs.extend(s.items())
    from .magma import format_monomial

    return _render_terms(
        pairs, lambda m: format_monomial(m, "latex" if latex else "compact"), latex
    )


def format_assoc_series(s: AssocSeries, style: str = "compact") -> str:
    latex = style == "latex"
    pairs = []
    if s.constant:
        pairs.append((None, s.constant))
    pairs.extend(s.items())
    return _render_terms(pairs, lambda w: w, latex)


def series_to_json(s: Series) -> dict:
    return {
        "truncation": s.truncation,
        "constant": format_coeff(s.constant),
        "terms": [
            {"monomial": monomial_to_json(m), "coeff": format_coeff(c)} for m, c in s.items()
        ],
    }


def series_from_json(data: dict) -> Series:
    return Series(
        int(data["truncation"]),
        {monomial_from_json(t["monomial"]): parse_coeff(t["coeff"]) for t in data["terms"]},
        parse_coeff(data.get("constant", 0)),
    )
