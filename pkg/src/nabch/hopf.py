"""Non-associative Hopf structure on truncated series.

Comultiplication is the algebra-morphism extension of x -> x(x)1 + 1(x)x,
the counit reads off the constant term, and the left/right divisions are
the unique bilinear operations satisfying

    sum u_(1) \\ (u_(2) v) = eps(u) v      sum (v u_(1)) / u_(2) = eps(u) v.

There is no antipode here: the divisions are grounded on the unit component
of the coproduct instead, which is what makes them total in the
non-associative setting.
"""

from __future__ import annotations

from fractions import Fraction

from .magma import Monomial, monomial_from_json, monomial_to_json, node
from .series import Q, Series, _join_truncation

# Tensor-square keys are (left, right) with None standing for the unit slot.
TensorKey = tuple


def _graft(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return node(a, b)


def _key_degree(k: TensorKey) -> int:
    a, b = k
    return (0 if a is None else a.degree) + (0 if b is None else b.degree)


class TensorSeries:
    """Sparse element of the tensor square, truncated on total pair degree."""

    __slots__ = ("truncation", "terms")

    def __init__(self, truncation: int, terms=None):
        if truncation < 1:
            raise ValueError("truncation degree must be >= 1")
        self.truncation = truncation
        clean: dict[TensorKey, Q] = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                if _key_degree(k) > truncation:
                    continue
                c = Q(c)
                if c:
                    prev = clean.get(k, Q(0)) + c
                    if prev:
                        clean[k] = prev
                    elif k in clean:
                        del clean[k]
        self.terms = clean

    def coefficient(self, k: TensorKey) -> Q:
        return self.terms.get(k, Q(0))

    def items(self):
        def sort_key(kv):
            a, b = kv[0]
            ka = (0,) if a is None else (1,) + a.key
            kb = (0,) if b is None else (1,) + b.key
            return (_key_degree(kv[0]), ka, kb)

        return sorted(self.terms.items(), key=sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.terms == other.terms

    def __add__(self, other):
        n = _join_truncation(self.truncation, other.truncation)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Q(0)) + c
        return TensorSeries(n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, TensorSeries):
            n = _join_truncation(self.truncation, other.truncation)
            out: dict[TensorKey, Q] = {}
            for (a1, b1), c1 in self.terms.items():
                d1 = _key_degree((a1, b1))
                for (a2, b2), c2 in other.terms.items():
                    if d1 + _key_degree((a2, b2)) <= n:
                        k = (_graft(a1, a2), _graft(b1, b2))
                        out[k] = out.get(k, Q(0)) + c1 * c2
            return TensorSeries(n, out)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, c):
        c = Q(c)
        return TensorSeries(self.truncation, {k: c * v for k, v in self.terms.items()})

    def __repr__(self):
        parts = []
        for (a, b), c in self.items():
            sa = "1" if a is None else repr(a)
            sb = "1" if b is None else repr(b)
            parts.append(f"{c} {sa}(x){sb}")
        return " + ".join(parts) if parts else "0"

    __hash__ = None


_COPRODUCT: dict[Monomial, dict[TensorKey, int]] = {}


def coproduct_monomial(m: Monomial) -> dict[TensorKey, int]:
    """Delta(m) as an exact integer combination of tensor pairs."""
    out = _COPRODUCT.get(m)
    if out is not None:
        return out
    if m.is_leaf:
        out = {(m, None): 1, (None, m): 1}
    else:
        dl = coproduct_monomial(m.left)
        dr = coproduct_monomial(m.right)
        out = {}
        for (a1, b1), c1 in dl.items():
            for (a2, b2), c2 in dr.items():
                k = (_graft(a1, a2), _graft(b1, b2))
                out[k] = out.get(k, 0) + c1 * c2
    _COPRODUCT[m] = out
    return out


def coproduct(s: Series) -> TensorSeries:
    """Delta(s), truncated on total pair degree."""
    n = s.truncation
    out: dict[TensorKey, Q] = {}
    if s.constant:
        out[(None, None)] = s.constant
    for m, c in s.terms.items():
        for k, mult in coproduct_monomial(m).items():
            out[k] = out.get(k, Q(0)) + c * mult
    return TensorSeries(n, out)


def counit(s: Series) -> Q:
    return s.constant


def proper_components(m: Monomial):
    """Sweedler components of Delta(m) with both factors of positive degree."""
    return [((a, b), c) for (a, b), c in coproduct_monomial(m).items() if a is not None and b is not None]


_LEFT_DIV: dict[tuple, dict[Monomial, int]] = {}
_RIGHT_DIV: dict[tuple, dict[Monomial, int]] = {}


def left_divide_monomial(u: Monomial, v) -> dict[Monomial, int]:
    """u \\ v for a monomial u and a monomial-or-unit v (v = None is the unit).

    Computed by induction on the degree of u:
    u \\ v = -uv - sum' u'_(1) \\ (u'_(2) v) over proper Sweedler components.
    """
    key = (u, v)
    out = _LEFT_DIV.get(key)
    if out is not None:
        return out
    out = {_graft(u, v): -1}
    for (a, b), c in proper_components(u):
        for t, k in left_divide_monomial(a, _graft(b, v)).items():
            nk = out.get(t, 0) - c * k
            if nk:
                out[t] = nk
            elif t in out:
                del out[t]
    _LEFT_DIV[key] = out
    return out


def right_divide_monomial(v, u: Monomial) -> dict[Monomial, int]:
    """v / u, the mirror recursion inducting on the degree of u."""
    key = (v, u)
    out = _RIGHT_DIV.get(key)
    if out is not None:
        return out
    out = {_graft(v, u): -1}
    for (a, b), c in proper_components(u):
        for t, k in right_divide_monomial(_graft(v, a), b).items():
            nk = out.get(t, 0) - c * k
            if nk:
                out[t] = nk
            elif t in out:
                del out[t]
    _RIGHT_DIV[key] = out
    return out


def left_divide(u: Series, v: Series) -> Series:
    """Bilinear extension of the monomial-level left division; 1 \\ v = v."""
    n = _join_truncation(u.truncation, v.truncation)
    out: dict[Monomial, Q] = {}
    const = Q(0)
    vs = list(v.terms.items())
    if v.constant:
        vs.append((None, v.constant))
    for m, cu in u.terms.items():
        for t, cv in vs:
            if m.degree + (0 if t is None else t.degree) > n:
                continue
            for r, k in left_divide_monomial(m, t).items():
                if r.degree <= n:
                    out[r] = out.get(r, Q(0)) + cu * cv * k
    if u.constant:
        for t, cv in vs:
            if t is None:
                const += u.constant * cv
            else:
                out[t] = out.get(t, Q(0)) + u.constant * cv
    return Series(n, out, const)


def right_divide(v: Series, u: Series) -> Series:
    """Bilinear extension of the monomial-level right division; v / 1 = v."""
    n = _join_truncation(u.truncation, v.truncation)
    out: dict[Monomial, Q] = {}
    const = Q(0)
    vs = list(v.terms.items())
    if v.constant:
        vs.append((None, v.constant))
    for m, cu in u.terms.items():
        for t, cv in vs:
            if m.degree + (0 if t is None else t.degree) > n:
                continue
            for r, k in right_divide_monomial(t, m).items():
                if r.degree <= n:
                    out[r] = out.get(r, Q(0)) + cu * cv * k
    if u.constant:
        for t, cv in vs:
            if t is None:
                const += u.constant * cv
            else:
                out[t] = out.get(t, Q(0)) + u.constant * cv
    return Series(n, out, const)


def is_primitive(s: Series) -> bool:
    """Delta(s) = s(x)1 + 1(x)s and eps(s) = 0, up to the truncation."""
    if s.constant:
        return False
    expected: dict[TensorKey, Q] = {}
    for m, c in s.terms.items():
        expected[(m, None)] = c
        expected[(None, m)] = c
    return coproduct(s).terms == expected


def is_grouplike(s: Series) -> bool:
    """Delta(s) = s(x)s and eps(s) = 1, up to the truncation."""
    if s.constant != 1:
        return False
    n = s.truncation
    expected: dict[TensorKey, Q] = {(None, None): Q(1)}
    for m, c in s.terms.items():
        expected[(m, None)] = c
        expected[(None, m)] = c
    for m1, c1 in s.terms.items():
        for m2, c2 in s.terms.items():
            if m1.degree + m2.degree <= n:
                k = (m1, m2)
                expected[k] = expected.get(k, Q(0)) + c1 * c2
    got = coproduct(s).terms
    return got == {k: v for k, v in expected.items() if v}


def tensor_to_json(t: TensorSeries) -> dict:
    def enc(m):
        return "1" if m is None else monomial_to_json(m)

    return {
        "truncation": t.truncation,
        "terms": [
            {"monomial": [enc(a), enc(b)], "coeff": str(c)} for (a, b), c in t.items()
        ],
    }


def tensor_from_json(data: dict) -> TensorSeries:
    def dec(e):
        return None if e == "1" else monomial_from_json(e)

    return TensorSeries(
        int(data["truncation"]),
        {
            (dec(t["monomial"][0]), dec(t["monomial"][1])): Fraction(t["coeff"])
            for t in data["terms"]
        },
    )
