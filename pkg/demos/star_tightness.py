"""
Why 2k - 2 cannot be lowered
============================

The out-star on k vertices needs a host vertex of out-degree k - 1. In the
regular tournament of order 2k - 3 every vertex has out-degree exactly k - 2,
so the star is missing even though the tournament has chromatic number
2k - 3. One more vertex and any tournament has a vertex of large enough
out-degree.
"""

from orientree.embed import brute_force_embed
from orientree.harness.generators import random_tournament, regular_tournament
from orientree.trees import out_star

for k in range(3, 8):
    R = regular_tournament(2 * k - 3)
    star = out_star(k)
    missing = brute_force_embed(R, star) is None
    degrees = {R.out_degree(v) for v in range(R.n)}
    print(f"k={k}: regular tournament of order {R.n}, out-degrees {sorted(degrees)}, star missing: {missing}")

# %%
# Tournaments of order 2k - 2 always contain the star: the average out-degree
# is (2k - 3) / 2, so some vertex reaches k - 1.

k = 6
hits = sum(brute_force_embed(random_tournament(2 * k - 2, s), out_star(k)) is not None for s in range(50))
print(f"k={k}: star found in {hits}/50 random tournaments of order {2 * k - 2}")
