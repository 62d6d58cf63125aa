"""
Where appending a single arc costs one more colour
==================================================

Appending a directed path of length l to a c'-universal tree on k' vertices is
advertised at cost c' + k' + 2l - 3. The construction routes the path through
a sink of the acyclic part, and when the first step already lands on that
sink the path comes up one arc short. For l = 1 the formula even fails
outright: a point plus one arc would be 1-universal.
"""

import math

from orientree.bounds import BoundSpec, evaluate_bound
from orientree.digraph import Digraph
from orientree.embed import brute_force_embed
from orientree.embed.gluing import glued_tree
from orientree.embed.pipelines import bblock_embedder
from orientree.harness.experiments import bblock_paths
from orientree.harness.generators import random_tournament
from orientree.trees import OrientedTree, RootedOrientedPath, blocks

print("point + arc, displayed cost:", evaluate_bound(BoundSpec("glue_directed", c_prime=1, k_prime=1, ell=1)))
T = glued_tree(OrientedTree.single(0), RootedOrientedPath((0, 1), (True,)))
print("copy in the 1-vertex digraph:", brute_force_embed(Digraph(1), T))

# %%
# The conservative variant pays c' + k' + 2l - 2 and always succeeds there.
# For 3-block paths this turns the 2k - 3 target into 2k - 2 whenever both
# end-blocks are single arcs. Here are the constructive success rates on random
# tournaments of order exactly 2k - 3, next to exhaustive search.

for k in range(4, 8):
    n = 2 * k - 3
    ok = total = found = 0
    for P in bblock_paths(k, 3):
        E = bblock_embedder(P)
        for s in range(20):
            D = random_tournament(n, s)
            total += 1
            ok += E(D) is not None
            found += brute_force_embed(D, E.tree) is not None
    print(f"k={k}: constructive {ok}/{total}, exhaustive {found}/{total}")

# %%
# The misses concentrate on paths like (1, k-3, 1): both end-blocks are single arcs.

P = RootedOrientedPath.from_directions([True, False, False, True])
print("blocks:", [b.length for b in blocks(P)], "pipeline guarantee:", bblock_embedder(P).threshold,
      "formula:", evaluate_bound(BoundSpec("bblock", k=5, b=3)))
print("ceil of the general bound for comparison:", math.ceil(evaluate_bound(BoundSpec("main", k=5))))
