"""Gluing steps: grow a copy of ``T'`` into a copy of ``T`` by appending a path or leaves."""

from __future__ import annotations

from ..digraph import Digraph, InstanceTooLargeError, bits, induced, to_mask
from ..trees import OrientedTree, RootedOrientedPath, leaf_sets
from .base import Embedder, is_embedding, lift, log
from .bruteforce import DEFAULT_BRUTE_CAP, brute_force_embed
from .dag import embed_tree_in_dag
from .partition import Partition3, directed_partition, oriented_partition


def glued_tree(T1: OrientedTree, path: RootedOrientedPath) -> OrientedTree:
    if path.root not in T1.vertices:
        raise ValueError(f"path root {path.root} is not a vertex of the base tree")
    if set(path.vertices[1:]) & set(T1.vertices):
        raise ValueError("appended path must be disjoint from the base tree apart from its root")
    return OrientedTree(T1.vertices + path.vertices[1:], T1.arcs | path.arcs, T1.root)


def _whole_tree_in_dag(H: Digraph, Y, T: OrientedTree, root: int) -> dict | None:
    if len(Y) < T.k:
        return None
    sub, index = induced(H, Y)
    part = embed_tree_in_dag(sub, T, root, check=False)
    if not part.X:
        # then D[Y] = D[K] is (|T|-1)-colourable
        return None
    return lift(part.embeddings[min(part.X)], index)


def _sub_in_x(D: Digraph, part: Partition3, sub: Embedder) -> dict | None:
    if len(part.X) < sub.tree.k:
        return None
    DX, index = induced(D, part.X)
    m = sub(DX)
    return None if m is None else lift(m, index)


def _walk_to_end(H: Digraph, Ym: int, y: int, outward: bool) -> list[int]:
    walk = [y]
    while True:
        nxt = (H.out_mask(walk[-1]) if outward else H.in_mask(walk[-1])) & Ym
        if not nxt:
            return walk
        walk.append((nxt & -nxt).bit_length() - 1)


def _best_run(H: Digraph, part: Partition3, x: int, outward: bool) -> list[int] | None:
    """Longest continuation from ``x``: through D[Y] to an end vertex, then its recorded path."""
    Ym = to_mask(part.Y)
    memo: dict = {}

    def best(v):
        if v not in memo:
            nxt = (H.out_mask(v) if outward else H.in_mask(v)) & Ym
            if not nxt:
                p = part.paths[v]
                memo[v] = list(p) if outward else list(p[::-1])
            else:
                memo[v] = [v] + max((best(w) for w in bits(nxt)), key=len)
        return memo[v]

    starts = (H.out_mask(x) if outward else H.in_mask(x)) & Ym
    runs = [best(y) for y in bits(starts)]
    return max(runs, key=len) if runs else None


def directed_extension(H: Digraph, part: Partition3, x: int, outward: bool, ell: int) -> list[int] | None:
    """Host vertices ``x, v1, ..., v_ell`` of a directed path leaving (or entering) ``x``."""
    Ym = to_mask(part.Y)
    y = part.out_witness[x] if outward else part.in_witness[x]
    walk = _walk_to_end(H, Ym, y, outward)
    s = walk[-1]
    rec = part.paths[s]
    tail = list(rec[1:]) if outward else list(rec[:-1][::-1])
    seq = [x] + walk + tail
    if len(seq) - 1 < ell:
        run = _best_run(H, part, x, outward)
        if run is None or len(run) < ell:
            return None
        seq = [x] + run
    return seq[: ell + 1]


def free_extension(D: Digraph, used: int, x: int, outward: bool, ell: int, budget: int = 20000) -> list[int] | None:
    """Depth-first search for a directed path of length ``ell`` from ``x`` avoiding ``used``.

    Gives up (returns None) after ``budget`` vertex expansions.
    """
    path = [x]
    left = [budget]

    def rec(v: int, used: int) -> bool:
        if len(path) == ell + 1:
            return True
        for w in bits((D.out_mask(v) if outward else D.in_mask(v)) & ~used):
            left[0] -= 1
            if left[0] < 0:
                return False
            path.append(w)
            if rec(w, used | (1 << w)):
                return True
            path.pop()
        return False

    return list(path) if rec(x, used | (1 << x)) else None


def _glue_directed_once(D, sub, path, T, param, search):
    outward = path.forward[0]
    part = directed_partition(D, param, "forward" if outward else "reversed")
    m = _whole_tree_in_dag(part.host, part.Y, T, path.root)
    if m is not None:
        return m
    m = _sub_in_x(D, part, sub)
    if m is None:
        return None
    x = m[path.root]
    seq = directed_extension(part.host, part, x, outward, path.length)
    if seq is None and search:
        seq = free_extension(D, to_mask(m.values()), x, outward, path.length)
    if seq is None:
        return None
    for t, h in zip(path.vertices[1:], seq[1:]):
        m[t] = h
    return m


def glue_directed_path(
    D: Digraph, sub: Embedder, path: RootedOrientedPath, slack: int = 1, search: bool = False
) -> dict | None:
    """Embed ``sub.tree`` with the directed ``path`` hanging off ``path.root``.

    The path leaves the attach vertex when its arcs point away from the root,
    and enters it otherwise. The partition is taken with parameter
    ``ℓ - 2 + slack``; ``slack=1`` guarantees success once
    ``χ(D) >= c' + k' + 2ℓ - 2``, ``slack=0`` tries the tighter ``2ℓ - 3``.

    With ``search`` a miss is retried with the other partition parameter,
    and the last step may use any directed path that avoids the copy of
    ``T'``. Both only add chances; the guarantee is unchanged.
    """
    ell = path.length
    if ell < 1 or not path.is_directed():
        raise ValueError("need a directed path of positive length")
    T = glued_tree(sub.tree, path)
    params = [max(ell - 2 + slack, 0)]
    if search and max(ell - 1 - slack, 0) not in params:
        params.append(max(ell - 1 - slack, 0))
    for param in params:
        m = _glue_directed_once(D, sub, path, T, param, search)
        if m is not None:
            return m
    return None


def glue_oriented_path(D: Digraph, sub: Embedder, Q: RootedOrientedPath) -> dict | None:
    """Embed ``sub.tree`` with the rooted oriented path ``Q`` hanging off ``Q.root``.

    Guaranteed once ``χ(D) >= c' + k' + ℓ(ℓ+1)/2 - 1``.
    """
    if Q.length < 1:
        raise ValueError("need a path of positive length")
    T = glued_tree(sub.tree, Q)
    part = oriented_partition(D, Q.tail())
    m = _whole_tree_in_dag(D, part.Y, T, Q.root)
    if m is not None:
        return m
    m = _sub_in_x(D, part, sub)
    if m is None:
        return None
    x = m[Q.root]
    y = part.out_witness[x] if Q.forward[0] else part.in_witness[x]
    for t, h in zip(Q.vertices[1:], part.paths[y]):
        m[t] = h
    return m


def complete_leaves(D: Digraph, T: OrientedTree, base: dict, leaves) -> dict | None:
    """Extend ``base`` to the leaves by bipartite matching onto unused neighbours."""
    used = to_mask(base.values())
    cand = {}
    for leaf in sorted(leaves):
        (p,) = T.neighbours(leaf)
        h = base[p]
        cand[leaf] = (D.out_mask(h) if (p, leaf) in T.arcs else D.in_mask(h)) & ~used
    owner: dict = {}

    def augment(leaf, seen):
        for h in bits(cand[leaf]):
            if h in seen:
                continue
            seen.add(h)
            if h not in owner or augment(owner[h], seen):
                owner[h] = leaf
                return True
        return False

    for leaf in sorted(leaves):
        if not augment(leaf, set()):
            return None
    m = dict(base)
    for h, leaf in owner.items():
        m[leaf] = h
    return m


def glue_leaves_fallback(
    D: Digraph, sub: Embedder, T: OrientedTree, mode: str = "out", cap: int = DEFAULT_BRUTE_CAP
) -> dict | None:
    """Embed ``T`` from a copy of ``T - Out(T)`` (or ``T - In(T)``) produced by ``sub``.

    The leaves are matched onto free neighbours of their parents' images;
    when that fails the whole tree goes to exhaustive search. A miss there
    on a host above the promised threshold is raised, never swallowed.
    """
    out, inn = leaf_sets(T)
    leaves = out if mode == "out" else inn
    if set(sub.tree.vertices) != set(T.vertices) - leaves:
        raise ValueError("sub-embedder tree must be T with the chosen leaves removed")
    base = sub(D)
    if base is not None:
        m = complete_leaves(D, T, base, leaves)
        if m is not None:
            return m
    log.info("leaf gluing fallback: tree order %d, host order %d", T.k, D.n)
    if D.n > cap:
        raise InstanceTooLargeError(f"leaf gluing fallback needs brute force on {D.n} > {cap} vertices")
    m = brute_force_embed(D, T, cap=cap)
    if m is None:
        log.warning("leaf gluing: no copy of a %d-vertex tree in a %d-vertex host", T.k, D.n)
    return m


def check_glued(D: Digraph, T: OrientedTree, m: dict | None) -> dict | None:
    if m is not None and not is_embedding(D, T, m):
        raise AssertionError("gluing produced an invalid embedding")
    return m


__all__ = [
    "check_glued",
    "complete_leaves",
    "directed_extension",
    "free_extension",
    "glue_directed_path",
    "glue_leaves_fallback",
    "glue_oriented_path",
    "glued_tree",
]
