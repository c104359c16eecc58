"""Shestakov-Umirbaev primitive operations.

The building block is the p-operation

    p(U, V, Z) = sum (U_(1) V_(1)) \\ (U_(2), V_(2), Z)

with (a,b,c) = (ab)c - a(bc) the associator; from it the bracket
<x1,...,xm; y, z> and the fully symmetrized Phi are assembled.  All of
them take arbitrary truncated series as arguments; the multilinear
generator forms are special cases.  The m = 0 bracket is a convention, not
an instance of the formula: <y,z> := -[y,z].

The same operations also exist symbolically as :class:`PrimExpr` trees with
an exact evaluator, plus a round-trip text syntax:

    x    [A,B]    <A1,...,Am; B, C>    Phi(A1,...,Am; B1,...,Bk)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import hopf
from .series import Q, Series, left_normed_product


def associator(a: Series, b: Series, c: Series) -> Series:
    return (a * b) * c - a * (b * c)


def p_series(u: Series, v: Series, z: Series) -> Series:
    """The primitive p-operation on series arguments."""
    n = min(u.truncation, v.truncation, z.truncation)
    du = hopf.coproduct(u)
    dv = hopf.coproduct(v)
    out = Series.zero(n)
    unit = Series.one(n)
    for (a, b), cu in du.terms.items():
        if b is None:
            continue  # associator with a unit slot vanishes
        sb = Series.monomial(b, n)
        for (c, d), cv in dv.terms.items():
            if d is None:
                continue
            w = hopf._graft(a, c)
            if (0 if w is None else w.degree) + b.degree + d.degree > n:
                continue
            assoc = associator(sb, Series.monomial(d, n), z)
            if assoc.is_zero():
                continue
            left = unit if w is None else Series.monomial(w, n)
            out = out + (cu * cv) * hopf.left_divide(left, assoc)
    return out


def su_bracket_series(u: Series, y: Series, z: Series) -> Series:
    """<u; y, z> for a series prefix u, including the unit-part convention.

    The counit part of u contributes eps(u) * (-[y,z]); the positive part
    goes through the p-operation.
    """
    n = min(u.truncation, y.truncation, z.truncation)
    out = Series.zero(n)
    if u.constant:
        out = out + u.constant * (z * y - y * z)
    pos = u - Series(u.truncation, constant=u.constant)
    if not pos.is_zero():
        out = out + p_series(pos, z, y) - p_series(pos, y, z)
    return out


def su_bracket(prefix, y: Series, z: Series) -> Series:
    """<p1,...,pm; y, z>; the empty prefix is -[y,z]."""
    prefix = list(prefix)
    if not prefix:
        return z * y - y * z
    return su_bracket_series(left_normed_product(prefix), y, z)


def phi(xs, ys) -> Series:
    """Phi, the symmetrization of p over both argument lists.

    xs has length m >= 1 and ys length n+1 >= 2; the prefactor is
    1/(m!(n+1)!) against the sum over all orderings of each list.
    """
    xs = list(xs)
    ys = list(ys)
    if not xs:
        raise ValueError("Phi needs at least one symmetrized prefix argument")
    if len(ys) < 2:
        raise ValueError("Phi needs at least two symmetrized tail arguments")
    total = None
    for sx in permutations(xs):
        xbar = left_normed_product(sx)
        for sy in permutations(ys):
            ybar = left_normed_product(sy[:-1])
            term = p_series(xbar, ybar, sy[-1])
            total = term if total is None else total + term
    return total / (factorial(len(xs)) * factorial(len(ys)))


# ---------------------------------------------------------------------------
# Symbolic expressions.  Interned immutable trees: equal expressions are the
# same object, hash and degree are precomputed (they key every sparse
# combination and the interpreter cache).

_EXPR_POOL: dict = {}


class PrimExpr:
    """Base of the symbolic expression nodes; not instantiated directly."""

    __slots__ = ("key", "degree", "_hash")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PrimExpr):
            return NotImplemented
        return self.key == other.key

    def __repr__(self):
        return expr_to_text(self)

    def __reduce__(self):
        return (_expr_from_key, (self.key,))


def _intern(cls, key, degree, fields):
    got = _EXPR_POOL.get(key)
    if got is not None:
        return got
    self = object.__new__(cls)
    self.key = key
    self.degree = degree
    self._hash = hash(key)
    for name, value in fields:
        setattr(self, name, value)
    _EXPR_POOL[key] = self
    return self


class Gen(PrimExpr):
    __slots__ = ("name",)

    def __new__(cls, name: str):
        return _intern(cls, ("g", name), 1, (("name", name),))


class Commutator(PrimExpr):
    __slots__ = ("a", "b")

    def __new__(cls, a: PrimExpr, b: PrimExpr):
        key = ("c", a.key, b.key)
        return _intern(cls, key, a.degree + b.degree, (("a", a), ("b", b)))


class SUBracket(PrimExpr):
    __slots__ = ("prefix", "y", "z")

    def __new__(cls, prefix, y: PrimExpr, z: PrimExpr):
        prefix = tuple(prefix)
        if not prefix:
            raise ValueError("empty bracket prefix; the m = 0 case is a Commutator")
        key = ("s", tuple(p.key for p in prefix), y.key, z.key)
        deg = sum(p.degree for p in prefix) + y.degree + z.degree
        return _intern(cls, key, deg, (("prefix", prefix), ("y", y), ("z", z)))


class Phi(PrimExpr):
    __slots__ = ("xs", "ys")

    def __new__(cls, xs, ys):
        xs = tuple(xs)
        ys = tuple(ys)
        if not xs or len(ys) < 2:
            raise ValueError("Phi needs m >= 1 prefix arguments and >= 2 tail arguments")
        key = ("p", tuple(p.key for p in xs), tuple(p.key for p in ys))
        deg = sum(p.degree for p in xs) + sum(p.degree for p in ys)
        return _intern(cls, key, deg, (("xs", xs), ("ys", ys)))


def _expr_from_key(key):
    tag = key[0]
    if tag == "g":
        return Gen(key[1])
    if tag == "c":
        return Commutator(_expr_from_key(key[1]), _expr_from_key(key[2]))
    if tag == "s":
        return SUBracket(
            tuple(_expr_from_key(k) for k in key[1]),
            _expr_from_key(key[2]),
            _expr_from_key(key[3]),
        )
    return Phi(
        tuple(_expr_from_key(k) for k in key[1]), tuple(_expr_from_key(k) for k in key[2])
    )


GX = Gen("x")
GY = Gen("y")


def su_bracket_expr(prefix, y: PrimExpr, z: PrimExpr) -> PrimExpr:
    """Symbolic bracket; <y,z> = -[y,z] is normalized to [z,y]."""
    prefix = tuple(prefix)
    if not prefix:
        return Commutator(z, y)
    return SUBracket(prefix, y, z)


def phi_expr(xs, ys) -> Phi:
    return Phi(tuple(xs), tuple(ys))


def expr_degree(e: PrimExpr) -> int:
    return e.degree


_EVAL: dict[PrimExpr, Series] = {}


def eval_prim(e: PrimExpr, n: int) -> Series:
    """Evaluate a symbolic expression to a truncated series.

    Expressions are homogeneous, so the value is computed once at the
    expression's own degree and re-truncated on demand.
    """
    d = e.degree
    if d > n:
        return Series.zero(n)
    out = _EVAL.get(e)
    if out is None:
        if isinstance(e, Gen):
            out = Series.generator(e.name, d)
        elif isinstance(e, Commutator):
            a = eval_prim(e.a, d)
            b = eval_prim(e.b, d)
            out = a * b - b * a
        elif isinstance(e, SUBracket):
            out = su_bracket(
                [eval_prim(p, d) for p in e.prefix], eval_prim(e.y, d), eval_prim(e.z, d)
            )
        else:
            out = phi([eval_prim(p, d) for p in e.xs], [eval_prim(p, d) for p in e.ys])
        _EVAL[e] = out
    if n == d:
        return out
    return Series(n, out.terms)


def expr_to_text(e: PrimExpr) -> str:
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Commutator):
        return f"[{expr_to_text(e.a)},{expr_to_text(e.b)}]"
    if isinstance(e, SUBracket):
        pre = ",".join(expr_to_text(p) for p in e.prefix)
        return f"<{pre}; {expr_to_text(e.y)},{expr_to_text(e.z)}>"
    xs = ",".join(expr_to_text(p) for p in e.xs)
    ys = ",".join(expr_to_text(p) for p in e.ys)
    return f"Phi({xs}; {ys})"


def expr_to_latex(e: PrimExpr) -> str:
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Commutator):
        return f"[{expr_to_latex(e.a)},{expr_to_latex(e.b)}]"
    if isinstance(e, SUBracket):
        pre = ",".join(expr_to_latex(p) for p in e.prefix)
        return f"\\langle {pre};{expr_to_latex(e.y)},{expr_to_latex(e.z)}\\rangle"
    xs = ",".join(expr_to_latex(p) for p in e.xs)
    ys = ",".join(expr_to_latex(p) for p in e.ys)
    return f"\\Phi({xs};{ys})"


class PrimParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_prim_expr(text: str) -> PrimExpr:
    """Inverse of :func:`expr_to_text`; whitespace-insensitive."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            raise PrimParseError(f"expected {ch!r}", pos)
        pos += 1

    def peek():
        skip()
        return text[pos] if pos < n else ""

    def name():
        nonlocal pos
        skip()
        start = pos
        while pos < n and text[pos].isalpha():
            pos += 1
        if start == pos:
            raise PrimParseError("expected a name", pos)
        return text[start:pos]

    def expr_list(closers):
        items = [expr()]
        while peek() == ",":
            expect(",")
            items.append(expr())
        if peek() not in closers:
            raise PrimParseError(f"expected one of {sorted(closers)}", pos)
        return items

    def expr() -> PrimExpr:
        nonlocal pos
        ch = peek()
        if ch == "[":
            expect("[")
            a = expr()
            expect(",")
            b = expr()
            expect("]")
            return Commutator(a, b)
        if ch == "<":
            expect("<")
            first = expr_list({";", ">"})
            if peek() == ";":
                expect(";")
                tail = expr_list({">"})
                expect(">")
                if len(tail) != 2:
                    raise PrimParseError("bracket needs exactly two tail arguments", pos)
                return su_bracket_expr(first, tail[0], tail[1])
            expect(">")
            if len(first) != 2:
                raise PrimParseError("prefix-free bracket needs exactly two arguments", pos)
            return su_bracket_expr([], first[0], first[1])
        w = name()
        if w == "Phi":
            expect("(")
            xs = expr_list({";"})
            expect(";")
            ys = expr_list({")"})
            expect(")")
            return phi_expr(xs, ys)
        if len(w) == 1 and w in ("x", "y", "z"):
            return Gen(w)
        raise PrimParseError(f"unknown name {w!r}", pos - len(w))

    out = expr()
    skip()
    if pos != n:
        raise PrimParseError(f"trailing input {text[pos]!r}", pos)
    return out


class PrimCombo:
    """A rational linear combination of primitive-operation expressions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[PrimExpr, Q] = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Q(c)
                if c:
                    prev = clean.get(e, Q(0)) + c
                    if prev:
                        clean[e] = prev
                    elif e in clean:
                        del clean[e]
        self.terms = clean

    @classmethod
    def single(cls, e: PrimExpr, coeff=1) -> "PrimCombo":
        return cls({e: Q(coeff)})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (expr_degree(kv[0]), expr_to_text(kv[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PrimCombo):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Q(0)) + c
        return PrimCombo(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, c):
        c = Q(c)
        return PrimCombo({e: c * v for e, v in self.terms.items()})

    __rmul__ = __mul__

    def component(self, d: int) -> "PrimCombo":
        return PrimCombo({e: c for e, c in self.terms.items() if expr_degree(e) == d})

    def up_to(self, d: int) -> "PrimCombo":
        return PrimCombo({e: c for e, c in self.terms.items() if expr_degree(e) <= d})

    def max_degree(self) -> int:
        return max((expr_degree(e) for e in self.terms), default=0)

    def evaluate(self, n: int) -> Series:
        out = Series.zero(n)
        for e, c in self.terms.items():
            out = out + c * eval_prim(e, n)
        return out

    def to_text(self, latex: bool = False) -> str:
        render = expr_to_latex if latex else expr_to_text
        chunks = []
        for e, c in self.items():
            neg = c < 0
            mag = -c if neg else c
            if latex and mag.denominator != 1:
                cs = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                cs = str(mag)
            body = render(e) if mag == 1 else f"{cs}{'' if latex else ' '}{render(e)}"
            if not chunks:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks) if chunks else "0"

    def to_json(self) -> list:
        return [{"coeff": str(c), "expr": expr_to_text(e)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "PrimCombo":
        return cls({parse_prim_expr(t["expr"]): Fraction(t["coeff"]) for t in data})

    def __repr__(self):
        return self.to_text()

    __hash__ = None
