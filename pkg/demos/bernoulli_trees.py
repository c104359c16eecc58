"""Four routes to B_k/k!.

The defining recurrence, Woon's signed-label tree, Fuchs's PI tree with the
weights -1/(n+1)!, and the all-ones composition coefficient n_(1,...,1)
all produce the same rationals.
"""

from math import factorial

from nabch import bernoulli, fuchs_level_sum, n_coeff, nj_tree_sum, woon_level_sum
from nabch.trees import bernoulli_weights, pi_level

print("k | recurrence | woon | fuchs | n_(1..1)")
for k in range(2, 11):
    rec = bernoulli(k) / factorial(k)
    woon = woon_level_sum(k)
    fuchs = fuchs_level_sum(k, bernoulli_weights)
    nj = n_coeff((1,) * k)
    assert rec == woon == fuchs == nj
    print(f"{k} | {rec} | {woon} | {fuchs} | {nj}")

print("\nPI-tree levels 1..4:")
for k in range(1, 5):
    print(f"level {k}: {pi_level(k)}")

print("\nthe word tree also computes general n_J, e.g.")
for j in [(1,), (2,), (2, 1), (1, 2), (3, 1, 2)]:
    print(f"n_{j} = {nj_tree_sum(j)}  (direct: {n_coeff(j)})")
