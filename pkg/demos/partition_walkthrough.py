"""
Anatomy of an (X, Y, Z) partition
=================================

The gluing steps split the host into three parts. ``Y`` induces an acyclic
digraph, every vertex of ``X`` closes a cycle through ``Y`` (so it has an
in- and an out-neighbour there), and ``Z`` has small chromatic number while
carrying ready-made directed paths that start at the sinks of ``Y``.
"""

from orientree.digraph import chromatic_number_of
from orientree.embed import directed_partition, oriented_partition
from orientree.harness.generators import random_tournament
from orientree.trees import RootedOrientedPath

D = random_tournament(15, seed=4)
part = directed_partition(D, 2)
print(f"|X|={len(part.X)} |Y|={len(part.Y)} |Z|={len(part.Z)}")
print("chi(D[Z]) =", chromatic_number_of(part.host, part.Z), "(at most 2 promised)")

# %%
# Each sink of D[Y] starts a directed path of length 2 whose other vertices lie in Z.

for s, path in sorted(part.paths.items()):
    print(f"sink {s}: path {' -> '.join(map(str, path))}")

# %%
# Every x in X carries its two witnesses in Y.

for x in sorted(part.X)[:4]:
    print(f"x={x}: in-witness {part.in_witness[x]}, out-witness {part.out_witness[x]}")

# %%
# The oriented version hangs a copy of a fixed rooted path off every vertex of Y.
# Z then grows to chromatic number at most l(l+1)/2.

Q = RootedOrientedPath.from_directions([True, False, True])
opart = oriented_partition(D, Q)
y = min(opart.Y)
print(f"copy of >-<-> from y={y}: {opart.paths[y]}; violations: {opart.violations(D)}")
