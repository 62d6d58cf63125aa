"""Trees in acyclic digraphs, and directed paths via the Gallai-Roy argument."""

from __future__ import annotations

from dataclasses import dataclass

from ..digraph import (
    Digraph,
    NotADAGError,
    bits,
    chromatic_number,
    in_kernel,
    is_acyclic,
    out_kernel,
    to_mask,
    topological_order,
)
from ..trees import OrientedTree


@dataclass(frozen=True)
class DagPartition:
    """``(X, K)`` split of a DAG: every ``x`` in ``X`` roots a copy of the tree inside ``K + x``."""

    X: frozenset
    K: frozenset
    embeddings: dict
    kernels: tuple = ()

    def embedding_for(self, x: int) -> dict:
        return self.embeddings[x]


def leaf_removal_order(T: OrientedTree, r: int) -> list[tuple[int, int, bool]]:
    """Peel leaves other than ``r`` (smallest label first) until only ``r`` is left.

    Each entry is ``(leaf, neighbour, arc_points_at_leaf)``.
    """
    alive = set(T.vertices)
    deg = {v: T.degree(v) for v in T.vertices}
    steps = []
    while len(alive) > 1:
        leaf = min(v for v in alive if v != r and deg[v] == 1)
        (nb,) = [w for w in T.neighbours(leaf) if w in alive]
        steps.append((leaf, nb, (nb, leaf) in T.arcs))
        alive.remove(leaf)
        deg[nb] -= 1
    return steps


def embed_tree_in_dag(D: Digraph, T: OrientedTree, r: int | None = None, check: bool = True) -> DagPartition:
    """Split an acyclic ``D`` into ``(X, K)`` with ``χ(D[K]) <= |T| - 1``.

    Every ``x`` in ``X`` gets a copy of ``T`` with ``r -> x`` and the other
    tree vertices in ``K``. Built by peeling one leaf at a time; each leaf
    takes a kernel of what is left (out-kernel when the arc points at the leaf,
    in-kernel otherwise), so ``K`` is a union of ``|T| - 1`` independent sets.

    With ``check`` the precondition ``χ(D) >= |T|`` is verified exactly.
    """
    if r is None:
        r = T.root if T.root is not None else T.vertices[0]
    if not is_acyclic(D):
        raise NotADAGError("embed_tree_in_dag needs an acyclic host")
    if check and D.n and chromatic_number(D) < T.k:
        raise ValueError(f"host chromatic number below tree order {T.k}")
    steps = leaf_removal_order(T, r)
    remaining = D.all_mask
    kernels = []
    for leaf, nb, towards_leaf in steps:
        K0 = out_kernel(D, bits(remaining)) if towards_leaf else in_kernel(D, bits(remaining))
        km = to_mask(K0)
        kernels.append(km)
        remaining &= ~km
    embeddings = {}
    for x in bits(remaining):
        img = {r: x}
        for (leaf, nb, towards_leaf), km in zip(reversed(steps), reversed(kernels)):
            h = img[nb]
            cand = (D.out_mask(h) if towards_leaf else D.in_mask(h)) & km
            img[leaf] = (cand & -cand).bit_length() - 1
        embeddings[x] = img
    K = to_mask(())
    for km in kernels:
        K |= km
    return DagPartition(frozenset(bits(remaining)), frozenset(bits(K)), embeddings, tuple(frozenset(bits(k)) for k in kernels))


def acyclic_arc_skeleton(D: Digraph) -> Digraph:
    """Arc-maximal acyclic spanning subdigraph, arcs added in sorted order."""
    out = [0] * D.n
    kept = []
    for u, v in sorted(D.arcs):
        # adding u->v closes a cycle iff v already reaches u
        frontier = 1 << v
        seen = frontier
        closes = False
        while frontier:
            if frontier >> u & 1:
                closes = True
                break
            nxt = 0
            for w in bits(frontier):
                nxt |= out[w]
            frontier = nxt & ~seen
            seen |= frontier
        if not closes:
            out[u] |= 1 << v
            kept.append((u, v))
    return Digraph(D.n, frozenset(kept))


def longest_path(D: Digraph) -> list[int]:
    """A longest directed path of an acyclic digraph (by vertex count)."""
    order = topological_order(D)
    best = {v: 1 for v in order}
    prev: dict = {v: None for v in order}
    for v in order:
        for w in bits(D.out_mask(v)):
            if best[v] + 1 > best[w]:
                best[w] = best[v] + 1
                prev[w] = v
    if not order:
        return []
    end = max(order, key=lambda v: (best[v], -v))
    path = []
    while end is not None:
        path.append(end)
        end = prev[end]
    return path[::-1]


def gallai_roy_path(D: Digraph, k: int) -> dict | None:
    """Directed path on ``k`` vertices as ``{i: host vertex}`` (path ``0 -> 1 -> ...``).

    Colouring each vertex by the longest path ending there in an arc-maximal
    acyclic subdigraph is proper for ``D``, so when this returns None the
    host is certifiably less than ``k``-chromatic.
    """
    if k < 1:
        raise ValueError("path order must be positive")
    if D.n < k:
        return None
    path = longest_path(acyclic_arc_skeleton(D))
    if len(path) < k:
        return None
    return {i: path[i] for i in range(k)}


def longest_path_colouring(D: Digraph) -> tuple:
    """The colouring behind :func:`gallai_roy_path` (colour = longest path ending at v, minus one)."""
    S = acyclic_arc_skeleton(D)
    depth = {}
    for v in topological_order(S):
        depth[v] = max((depth[u] + 1 for u in bits(S.in_mask(v))), default=0)
    return tuple(depth[v] for v in range(D.n))
