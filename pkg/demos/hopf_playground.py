"""The Hopf structure behind everything.

Comultiplication splits a tree over all leaf subsets, the divisions replace
the missing antipode, exponentials are group-like and logarithms primitive.
"""

from nabch import (
    Series,
    coproduct,
    exp_l,
    is_grouplike,
    is_primitive,
    left_divide,
    bch_monomial,
    p_series,
)

x = Series.generator("x", 4)
y = Series.generator("y", 4)

print("Delta(x)   =", coproduct(x))
print("Delta(xy)  =", coproduct(x * y))
print()
print("1 \\ y =", left_divide(Series.one(4), y))
print("x \\ y =", left_divide(x, y))
print()

e = exp_l("x", 5)
print("exp_l(x) group-like:", is_grouplike(e))
print("exp_l(x)exp_l(y) group-like:", is_grouplike(exp_l("x", 5) * exp_l("y", 5)))
print("x + y primitive:", is_primitive(x + y))
print("xy primitive:", is_primitive(x * y), "(the mixed term x(x)y obstructs)")
print("BCH series primitive:", is_primitive(bch_monomial(5)))
print()
print("p(x, y, z) on generators is the associator:")
z = Series.generator("z", 4)
print("  p(x,y,z) =", p_series(x, y, z))
print("  primitive:", is_primitive(p_series(x, y, z)))
