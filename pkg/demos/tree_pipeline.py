"""
Following one tree through the general pipeline
================================================

Trees with many leaves are handled by stripping the leaves, embedding the
rest, and matching the leaves back. Trees with few leaves are cut into short
oriented paths that are glued on one at a time. ``Embedder.trace`` records the
threshold promised after each gluing step.
"""

import math

from orientree.bounds import main_bound
from orientree.embed import embed_oriented_tree, embedding_violations
from orientree.embed.pipelines import oriented_tree_embedder, path_branch_chain
from orientree.harness.generators import random_tournament
from orientree.trees import OrientedTree, enumerate_oriented_trees

k = 5
n = math.ceil(main_bound(k))
D = random_tournament(n, seed=1)
for T in enumerate_oriented_trees(k):
    E = oriented_tree_embedder(T)
    m = embed_oriented_tree(D, T, chi=n)
    print(f"{sorted(T.arcs)}: {E.name:>18}, promised {float(E.threshold):6.2f}, valid {not embedding_violations(D, T, m)}")

# %%
# A long path with two twists goes through the path branch.

T = OrientedTree.from_arcs(12, [(0, 1), (1, 2), (3, 2), (3, 4), (4, 5), (5, 6), (7, 6), (7, 8),
                                (8, 9), (9, 10), (10, 11)])
E = oriented_tree_embedder(T)
print("trace of thresholds:", [float(c) for c in E.trace])
print("chain charged at the full chunk length:", path_branch_chain(T), "vs f(k) =", round(main_bound(T.k), 2))
