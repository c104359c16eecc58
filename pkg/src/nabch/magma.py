"""Free-magma monomials over {x, y}: leaf-labelled binary planar rooted trees.

A monomial is either a single generator or the ordered product of two
monomials.  Instances are immutable and interned, so equality is cheap and
they can serve as dictionary keys throughout the series layer.  The total
order used everywhere (printing, iteration, golden tests) compares degree
first, puts leaves before products, orders leaves alphabetically and
products lexicographically by (left, right).
"""

from __future__ import annotations

GENERATORS = ("x", "y")

# A third letter is tolerated at the object level so identities that
# quantify over three primitives can be exercised; the text grammar and the
# enumeration stay on the public two-letter alphabet.
_VALID_VARS = ("x", "y", "z")

_POOL: dict = {}


class ParseError(ValueError):
    """Malformed monomial text; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Monomial:
    """A binary tree with generator-labelled leaves.

    Build instances with :func:`leaf`, :func:`node`, :func:`parse` or
    :func:`left_normed_power`; direct construction is internal.  ``key`` is
    a nested tuple that uniquely encodes the tree and realizes the canonical
    order under plain tuple comparison.
    """

    __slots__ = ("var", "left", "right", "degree", "xdeg", "ydeg", "vars", "key", "_hash")

    def __init__(self, var, left, right, degree, xdeg, ydeg, vars_, key):
        self.var = var
        self.left = left
        self.right = right
        self.degree = degree
        self.xdeg = xdeg
        self.ydeg = ydeg
        self.vars = vars_
        self.key = key
        self._hash = hash(key)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return format_monomial(self)

    def __reduce__(self):
        return (_from_key, (self.key,))


def leaf(var: str) -> Monomial:
    """The monomial consisting of the single generator ``var``."""
    m = _POOL.get(var)
    if m is not None:
        return m
    if var not in _VALID_VARS:
        raise ValueError(f"unknown generator {var!r}; expected one of {_VALID_VARS}")
    m = Monomial(var, None, None, 1, int(var == "x"), int(var == "y"), (var,), (1, 0, var))
    _POOL[var] = m
    return m


def node(left: Monomial, right: Monomial) -> Monomial:
    """The ordered product of two monomials."""
    key = (left.degree + right.degree, 1, left.key, right.key)
    m = _POOL.get(key)
    if m is not None:
        return m
    vars_ = left.vars if left.vars == right.vars else tuple(sorted(set(left.vars) | set(right.vars)))
    m = Monomial(
        None,
        left,
        right,
        left.degree + right.degree,
        left.xdeg + right.xdeg,
        left.ydeg + right.ydeg,
        vars_,
        key,
    )
    _POOL[key] = m
    return m


def _from_key(key):
    if key[1] == 0:
        return leaf(key[2])
    return node(_from_key(key[2]), _from_key(key[3]))


X = leaf("x")
Y = leaf("y")
Z = leaf("z")


def degree(m: Monomial) -> int:
    return m.degree


def multidegree(m: Monomial) -> tuple[int, int]:
    """(number of x leaves, number of y leaves)."""
    return (m.xdeg, m.ydeg)


def compare(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 per the canonical order."""
    if a.key < b.key:
        return -1
    return 0 if a.key == b.key else 1


def left_normed_power(v, n: int) -> Monomial:
    """The left-normed n-th power (((vv)v)...)v; n >= 1."""
    if n < 1:
        raise ValueError("left_normed_power needs n >= 1 (the empty product is the series unit)")
    base = leaf(v) if isinstance(v, str) else v
    out = base
    for _ in range(n - 1):
        out = node(out, base)
    return out


def right_normed_power(v, n: int) -> Monomial:
    """The right-normed n-th power v(v(...(vv))); n >= 1."""
    if n < 1:
        raise ValueError("right_normed_power needs n >= 1")
    base = leaf(v) if isinstance(v, str) else v
    out = base
    for _ in range(n - 1):
        out = node(base, out)
    return out


def word_letters(m: Monomial) -> tuple[str, ...]:
    """Leaf labels in left-to-right order."""
    if m.is_leaf:
        return (m.var,)
    return word_letters(m.left) + word_letters(m.right)


def is_left_normed_word(m: Monomial) -> bool:
    """True for (((g1 g2)g3)...)gk with every gi a generator."""
    while not m.is_leaf:
        if not m.right.is_leaf:
            return False
        m = m.left
    return True


def relabel(m: Monomial, mapping: dict[str, str]) -> Monomial:
    if m.is_leaf:
        return leaf(mapping.get(m.var, m.var))
    return node(relabel(m.left, mapping), relabel(m.right, mapping))


def parse(text: str) -> Monomial:
    """Parse ``monomial ::= "x" | "y" | "(" monomial monomial ")"``.

    Whitespace is ignored; errors carry the offending position.
    """
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def term() -> Monomial:
        nonlocal pos
        skip()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch in GENERATORS:
            pos += 1
            return leaf(ch)
        if ch == "(":
            pos += 1
            left_m = term()
            right_m = term()
            skip()
            if pos >= n or text[pos] != ")":
                raise ParseError("expected ')'", pos)
            pos += 1
            return node(left_m, right_m)
        raise ParseError(f"unexpected character {ch!r}", pos)

    skip()
    if pos >= n:
        raise ParseError("empty input", pos)
    m = term()
    skip()
    if pos != n:
        raise ParseError(f"trailing input {text[pos]!r}", pos)
    return m


def _as_power(m: Monomial):
    """(v, n) if m is the left-normed n-th power of a generator, else None."""
    n = 0
    cur = m
    while not cur.is_leaf:
        if not cur.right.is_leaf or cur.right.var != _leftmost(m):
            return None
        n += 1
        cur = cur.left
    if cur.var != _leftmost(m):
        return None
    return (cur.var, n + 1)


def _leftmost(m: Monomial) -> str:
    while not m.is_leaf:
        m = m.left
    return m.var


def _latex(m: Monomial) -> str:
    pw = _as_power(m)
    if pw is not None:
        v, n = pw
        return v if n == 1 else f"{v}^{{{n}}}"
    parts = []
    for child in (m.left, m.right):
        s = _latex(child)
        if not child.is_leaf and _as_power(child) is None:
            s = f"({s})"
        parts.append(s)
    return "".join(parts)


def format_monomial(m: Monomial, style: str = "compact") -> str:
    """Render a monomial; ``compact`` round-trips through :func:`parse`."""
    if style == "compact":
        if m.is_leaf:
            return m.var
        return f"({format_monomial(m.left)}{format_monomial(m.right)})"
    if style == "latex":
        return _latex(m)
    raise ValueError(f"unknown style {style!r}")


_ENUM_CACHE: dict = {}


def enumerate_monomials(n: int, alphabet: tuple[str, ...] = GENERATORS) -> tuple[Monomial, ...]:
    """All monomials of degree n over ``alphabet``, canonically sorted.

    There are Catalan(n-1) * len(alphabet)**n of them.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    key = (n, alphabet)
    cached = _ENUM_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        out = tuple(leaf(v) for v in sorted(alphabet))
    else:
        acc = []
        for k in range(1, n):
            for a in enumerate_monomials(k, alphabet):
                for b in enumerate_monomials(n - k, alphabet):
                    acc.append(node(a, b))
        out = tuple(sorted(acc))
    _ENUM_CACHE[key] = out
    return out


def monomial_to_json(m: Monomial):
    """Nested two-element arrays with string leaves, e.g. [["x","x"],"y"]."""
    if m.is_leaf:
        return m.var
    return [monomial_to_json(m.left), monomial_to_json(m.right)]


def monomial_from_json(data) -> Monomial:
    if isinstance(data, str):
        return leaf(data)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return node(monomial_from_json(data[0]), monomial_from_json(data[1]))
    raise ValueError(f"not a monomial encoding: {data!r}")
