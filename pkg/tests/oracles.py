"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

import itertools

from orientree.digraph import Digraph


def chi_bruteforce(D: Digraph) -> int:
    """Smallest c admitting a proper colouring, by trying every assignment."""
    if D.n == 0:
        return 0
    edges = {frozenset(a) for a in D.arcs}
    for c in range(1, D.n + 1):
        for col in itertools.product(range(c), repeat=D.n - 1):
            col = (0,) + col
            if all(col[u] != col[v] for u, v in (tuple(e) for e in edges)):
                return c
    return D.n


def has_cycle(n: int, arcs, within=None) -> bool:
    verts = set(range(n)) if within is None else set(within)
    adj = {v: [w for (u, w) in arcs if u == v and w in verts] for v in verts}
    state = dict.fromkeys(verts, 0)

    def dfs(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1 or (state[w] == 0 and dfs(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and dfs(v) for v in sorted(verts))


def longest_directed_path_order(D: Digraph) -> int:
    """Order of a longest directed path (exhaustive DFS; small hosts only)."""
    best = 0

    def dfs(v, seen):
        nonlocal best
        best = max(best, len(seen))
        for w in range(D.n):
            if (v, w) in D.arcs and w not in seen:
                dfs(w, seen | {w})

    for v in range(D.n):
        dfs(v, {v})
    return best


def contains_tree(D: Digraph, arcs, k: int) -> bool:
    """Try every injective map of ``0..k-1`` into ``V(D)``."""
    for img in itertools.permutations(range(D.n), k):
        if all((img[a], img[b]) in D.arcs for a, b in arcs):
            return True
    return False


def prufer_trees(k: int):
    """Every labelled tree on ``0..k-1`` as an edge list."""
    if k == 1:
        yield []
        return
    if k == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(k), repeat=k - 2):
        degree = [1] * k
        for s in seq:
            degree[s] += 1
        edges = []
        for s in seq:
            leaf = min(i for i in range(k) if degree[i] == 1)
            edges.append((leaf, s))
            degree[leaf] -= 1
            degree[s] -= 1
        u, v = [i for i in range(k) if degree[i] == 1]
        edges.append((u, v))
        yield edges


def oriented_tree_classes(k: int) -> int:
    """Number of oriented trees of order ``k`` up to isomorphism, by permutation canonisation."""
    seen = set()
    perms = list(itertools.permutations(range(k)))
    for edges in prufer_trees(k):
        for flips in itertools.product((False, True), repeat=len(edges)):
            arcs = [(b, a) if f else (a, b) for (a, b), f in zip(edges, flips)]
            key = min(tuple(sorted((p[a], p[b]) for a, b in arcs)) for p in perms)
            seen.add(key)
    return len(seen)
