"""Magnus machinery for the left-normed exponential.

The tangent map tau(y) = exp_l(x) \\ (d/ds exp_l(x+sy))|_0 expands as
y + sum_J m_J P_J(x;y) over integer compositions J, with P_J the nested
bracket <x,..,x; x, <x,..,x; x, ... <x,..,x; x, y>>> using j_i - 1 prefix
copies at level i.  Its inverse carries the alternating coefficients

    n_J = sum over concatenation factorizations J = J_1 || ... || J_l
          of (-1)^l m_{J_1} ... m_{J_l},

which drive both the Magnus-type ODE  Omega' = A + sum_J n_J P_J(Omega; A)
and the two primitive-basis constructions of log_l(exp_l(x) exp_l(y)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial

from .series import Q, Series, exp_l, log_l
from .suops import (
    GX,
    GY,
    PrimCombo,
    PrimExpr,
    eval_prim,
    expr_degree,
    phi_expr,
    su_bracket,
    su_bracket_expr,
)

Composition = tuple


@lru_cache(maxsize=None)
def compositions(weight: int) -> tuple[Composition, ...]:
    """All tuples of positive integers summing to ``weight``."""
    if weight < 1:
        raise ValueError("composition weight must be >= 1")
    if weight == 1:
        return ((1,),)
    out = []
    for first in range(1, weight):
        for rest in compositions(weight - first):
            out.append((first,) + rest)
    out.append((weight,))
    return tuple(out)


@lru_cache(maxsize=None)
def m_coeff(j: Composition) -> Q:
    """m_J = prod_i 1/(j_i + ... + j_s + 1) * 1/(j_i - 1)!."""
    out = Q(1)
    suffix = sum(j)
    for part in j:
        if part < 1:
            raise ValueError("composition parts must be >= 1")
        out *= Q(1, (suffix + 1) * factorial(part - 1))
        suffix -= part
    return out


@lru_cache(maxsize=None)
def n_coeff(j: Composition) -> Q:
    """Alternating sum of m-products over all concatenation factorizations."""
    s = len(j)
    out = Q(0)
    for mask in range(1 << (s - 1)):
        blocks = []
        start = 0
        for i in range(s - 1):
            if mask >> i & 1:
                blocks.append(j[start : i + 1])
                start = i + 1
        blocks.append(j[start:])
        term = Q((-1) ** len(blocks))
        for b in blocks:
            term *= m_coeff(tuple(b))
        out += term
    return out


def p_nested(j: Composition, u: Series, v: Series) -> Series:
    """P_J(u; v), the nested bracket with j_i - 1 prefix copies of u at level i."""
    inner = v
    for part in reversed(j):
        inner = su_bracket([u] * (part - 1), u, inner)
    return inner


def p_nested_expr(j: Composition, u: PrimExpr = GX, v: PrimExpr = GY) -> PrimExpr:
    inner = v
    for part in reversed(j):
        inner = su_bracket_expr((u,) * (part - 1), u, inner)
    return inner


# ---------------------------------------------------------------------------
# The tangent map and its inverse.


def _weighted_sum(u: Series, v: Series, coeff) -> Series:
    """v + sum_J coeff(J) P_J(u; v), capped by the available degree budget."""
    n = min(u.truncation, v.truncation)
    min_u = u.min_degree()
    min_v = v.min_degree()
    if min_v is None:
        return v
    if min_u in (None, 0):
        raise ValueError("tangent-map base must have zero constant term and a linear part")
    out = v
    cap = (n - min_v) // min_u
    for weight in range(1, cap + 1):
        for j in compositions(weight):
            c = coeff(j)
            if c:
                out = out + c * p_nested(j, u, v)
    return out


def tau_apply(u: Series, v: Series) -> Series:
    """The tangent map of exp_l at u, applied to v: v + sum m_J P_J(u; v)."""
    return _weighted_sum(u, v, m_coeff)


def tau_inverse(u: Series, v: Series) -> Series:
    """Inverse tangent map: v + sum n_J P_J(u; v)."""
    return _weighted_sum(u, v, n_coeff)


def _bracket_combo(prefix_exprs, y_expr: PrimExpr, z: PrimCombo) -> PrimCombo:
    out = {}
    for e, c in z.terms.items():
        k = su_bracket_expr(prefix_exprs, y_expr, e)
        out[k] = out.get(k, Q(0)) + c
    return PrimCombo(out)


@lru_cache(maxsize=None)
def tau_components(n: int) -> tuple[PrimCombo, ...]:
    """tau_0 .. tau_n of the tangent map, as primitive-operation combinations.

    tau_0 = y and tau_k = sum_{i=1..k} 1/(k+1) * 1/(k-i)! <x^(k-i); x, tau_{i-1}>.
    """
    taus = [PrimCombo.single(GY)]
    for k in range(1, n + 1):
        acc = PrimCombo()
        for i in range(1, k + 1):
            bracket = _bracket_combo((GX,) * (k - i), GX, taus[i - 1])
            acc = acc + Q(1, (k + 1) * factorial(k - i)) * bracket
        taus.append(acc)
    return tuple(taus)


def tau_exp_l(n: int) -> Series:
    """The tangent map applied to y, evaluated at truncation n + 1.

    Cross-checks against gamma_{y d/dx}(exp_l(x)).
    """
    out = Series.zero(n + 1)
    for tau in tau_components(n):
        out = out + tau.evaluate(n + 1)
    return out


def _prune_zero_eval(combo: PrimCombo) -> PrimCombo:
    """Drop terms whose exact evaluation vanishes (e.g. brackets with equal
    tail slots produced by multilinear expansion)."""
    out = {}
    for e, c in combo.terms.items():
        if not eval_prim(e, expr_degree(e)).is_zero():
            out[e] = c
    return PrimCombo(out)


def tau_inverse_combo(n: int) -> PrimCombo:
    """y + sum n_J P_J(x;y) up to total degree n, symbolically."""
    out = PrimCombo.single(GY)
    for weight in range(1, n):
        for j in compositions(weight):
            c = n_coeff(j)
            if c:
                out = out + PrimCombo.single(p_nested_expr(j), c)
    return _prune_zero_eval(out)


# ---------------------------------------------------------------------------
# The two Baker-Campbell-Hausdorff constructions.


@lru_cache(maxsize=None)
def bch_monomial(n: int) -> Series:
    """log_l(exp_l(x) exp_l(y)) in the raw monomial basis, truncated at n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return log_l(exp_l("x", n) * exp_l("y", n), n)


def bch_first_order(n: int) -> Series:
    """x + (tangent inverse at x applied to y): the BCH series modulo y-degree >= 2."""
    x = Series.generator("x", n)
    y = Series.generator("y", n)
    return x + tau_inverse(x, y)


def bch_first_order_combo(n: int) -> PrimCombo:
    return PrimCombo.single(GX) + tau_inverse_combo(n)


def _cross_bracket(prefix_combos, y_combo: PrimCombo, z_combo: PrimCombo, cap: int) -> PrimCombo:
    """Multilinear expansion of the bracket over combination-valued slots."""
    slot_items = [list(c.items()) for c in prefix_combos] + [
        list(y_combo.items()),
        list(z_combo.items()),
    ]
    if any(not items for items in slot_items):
        return PrimCombo()
    out: dict[PrimExpr, Q] = {}
    for choice in product(*slot_items):
        total = sum(expr_degree(e) for e, _ in choice)
        if total > cap:
            continue
        coeff = Q(1)
        for _, c in choice:
            coeff *= c
        exprs = [e for e, _ in choice]
        key = su_bracket_expr(tuple(exprs[:-2]), exprs[-2], exprs[-1])
        out[key] = out.get(key, Q(0)) + coeff
    return PrimCombo(out)


def _pj_combo(j: Composition, slot_combos, z_combo: PrimCombo, cap: int) -> PrimCombo:
    """P_J over combination-valued slots; ``slot_combos`` lists the weight(J)
    bracket slots in order, ``z_combo`` fills the innermost position."""
    inner = z_combo
    idx = len(slot_combos)
    for part in reversed(j):
        level = slot_combos[idx - part : idx]
        idx -= part
        inner = _cross_bracket(level[:-1], level[-1], inner, cap)
        if inner.is_zero():
            return inner
    return inner


@lru_cache(maxsize=None)
def bch_ode(n: int) -> PrimCombo:
    """log_l(exp_l(x) exp_l(y)) in the primitive basis via the Magnus-type ODE.

    Omega(t) = log_l(exp_l(x) exp_l(ty)) satisfies Omega(0) = x and
    Omega' = D(t) + sum_J n_J P_J(Omega(t); D(t)) with the driver
    D(t) = y - Phi(exp_l(x); exp_l(ty); y); the group-like Phi argument
    expands as sum_{m,k>=1} t^k/(m! k!) Phi(x,..,x; y,..,y, y).  The t-power
    k tracks y-degree, so integrating to t = 1 term by term yields the
    full series; evaluation agrees exactly with :func:`bch_monomial`.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    driver: dict[int, PrimCombo] = {0: PrimCombo.single(GY)}
    for k in range(1, n - 1):
        acc = PrimCombo()
        for m in range(1, n - k):
            acc = acc + PrimCombo.single(
                phi_expr((GX,) * m, (GY,) * (k + 1)), -Q(1, factorial(m) * factorial(k))
            )
        if not acc.is_zero():
            driver[k] = acc

    omega: list[PrimCombo] = [PrimCombo.single(GX)]
    for k in range(n):
        rhs = driver.get(k, PrimCombo())
        for weight in range(1, n):
            for j in compositions(weight):
                nj = n_coeff(j)
                if not nj:
                    continue
                for d_ord, d_combo in driver.items():
                    rem = k - d_ord
                    if rem < 0:
                        continue
                    for orders in _distributions(rem, weight):
                        slots = [omega[o] for o in orders]
                        term = _pj_combo(j, slots, d_combo, n)
                        if not term.is_zero():
                            rhs = rhs + nj * term
        omega.append(_prune_zero_eval(Q(1, k + 1) * rhs.up_to(n)))

    total = PrimCombo()
    for part in omega:
        total = total + part
    return total.up_to(n)


@lru_cache(maxsize=None)
def _distributions(total: int, slots: int) -> tuple[tuple[int, ...], ...]:
    """All ways to write ``total`` as an ordered sum of ``slots`` values >= 0."""
    if slots == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _distributions(total - first, slots - 1):
            out.append((first,) + rest)
    return tuple(out)


# ---------------------------------------------------------------------------
# The formal Magnus integrator.


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Polynomial in a central parameter t with Series coefficients."""

    coeffs: tuple[Series, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a TimeSeries needs at least the t^0 coefficient")
        if len({c.truncation for c in self.coeffs}) != 1:
            raise ValueError("all coefficients must share one truncation")

    @property
    def truncation(self) -> int:
        return self.coeffs[0].truncation

    def coeff(self, k: int) -> Series:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return Series.zero(self.truncation)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        top = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) == other.coeff(k) for k in range(top))


def magnus_solve(a: TimeSeries, n_t: int, n_deg: int) -> TimeSeries:
    """Integrate Omega' = A(t) + sum_J n_J P_J(Omega(t); A(t)), Omega(0) = 0.

    Works order by order in t: the t^k coefficient of the right side only
    involves Omega coefficients of order <= k, and formal integration
    divides by k + 1.  Returns Omega up to t^{n_t}, series truncated at n_deg.
    """
    coeffs = tuple(c.truncate(n_deg) for c in a.coeffs)
    omega: list[Series] = [Series.zero(n_deg)]
    for k in range(n_t):
        rhs = coeffs[k] if k < len(coeffs) else Series.zero(n_deg)
        # every Omega slot consumes t-order >= 1, so weight <= k
        for weight in range(1, k + 1):
            for j in compositions(weight):
                nj = n_coeff(j)
                if not nj:
                    continue
                for a_ord in range(0, k - weight + 1):
                    a_part = coeffs[a_ord] if a_ord < len(coeffs) else None
                    if a_part is None or a_part.is_zero():
                        continue
                    # Omega slots take order >= 1 since Omega(0) = 0
                    for orders in _positive_distributions(k - a_ord, weight):
                        slots = [omega[o] for o in orders]
                        if any(s.is_zero() for s in slots):
                            continue
                        inner = a_part
                        idx = weight
                        for part in reversed(j):
                            level = slots[idx - part : idx]
                            idx -= part
                            inner = su_bracket(level[:-1], level[-1], inner)
                            if inner.is_zero():
                                break
                        if not inner.is_zero():
                            rhs = rhs + nj * inner
        omega.append(rhs / (k + 1))
    return TimeSeries(tuple(omega))


@lru_cache(maxsize=None)
def _positive_distributions(total: int, slots: int) -> tuple[tuple[int, ...], ...]:
    if slots == 1:
        return ((total,),) if total >= 1 else ()
    out = []
    for first in range(1, total - slots + 2):
        for rest in _positive_distributions(total - first, slots - 1):
            out.append((first,) + rest)
    return tuple(out)
