"""Recursive embedders for b-block paths, arborescences and general oriented trees.

Each ``*_embedder`` builds an :class:`Embedder` plan for a fixed tree by
composing base cases and gluing steps, carrying the threshold each step
promises. ``embed_*`` run a plan against a host and enforce preconditions.
"""

from __future__ import annotations

from ..bounds import arborescence_bound, bblock_bound, main_bound
from ..digraph import Digraph, bits, chromatic_number
from ..trees import (
    IN_STAR,
    OUT_STAR,
    OrientedTree,
    RootedOrientedPath,
    blocks,
    chunk_length,
    chunk_paths,
    descending_decomposition,
    is_star,
    leaf_sets,
    strip_leaves,
)
from .base import BoundViolation, Embedder, embedding_violations
from .bruteforce import DEFAULT_BRUTE_CAP, brute_force_embed
from .dag import gallai_roy_path
from .gluing import glue_directed_path, glue_leaves_fallback, glue_oriented_path, glued_tree

# ---------------------------------------------------------------------------
# base cases


def point_embedder(T: OrientedTree) -> Embedder:
    (v,) = T.vertices
    return Embedder(T, 1, lambda D: {v: 0} if D.n else None, "point")


def star_embedder(T: OrientedTree) -> Embedder:
    """Stars are (2k-2)-universal: some vertex has out- (in-) degree at least k-1."""
    kind = is_star(T)
    if kind is None:
        raise ValueError("not a star")
    if T.k == 1:
        return point_embedder(T)
    if T.k == 2:
        ((a, b),) = T.arcs

        def run_arc(D):
            if not D.arcs:
                return None
            u, v = min(D.arcs)
            return {a: u, b: v}

        return Embedder(T, 2, run_arc, "arc")
    centre = max(T.vertices, key=T.degree)
    leaves = sorted(set(T.vertices) - {centre})
    outward = kind == OUT_STAR

    def run(D):
        for h in range(D.n):
            nbrs = D.out_mask(h) if outward else D.in_mask(h)
            if nbrs.bit_count() >= len(leaves):
                m = {centre: h}
                m.update(zip(leaves, bits(nbrs)))
                return m
        return None

    return Embedder(T, 2 * T.k - 2, run, "star")


def directed_path_embedder(T: OrientedTree) -> Embedder:
    order = T.path_order()
    if T.k > 1 and (order[0], order[1]) not in T.arcs:
        order.reverse()

    def run(D):
        m = gallai_roy_path(D, T.k)
        return None if m is None else {t: m[i] for i, t in enumerate(order)}

    return Embedder(T, T.k, run, "gallai-roy")


def bruteforce_embedder(T: OrientedTree, threshold: int, name: str = "bruteforce", cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    return Embedder(T, threshold, lambda D: brute_force_embed(D, T, cap=cap), name)


def two_block_embedder(T: OrientedTree, cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    """2-block paths of order k >= 4 are k-universal (external result); copies found by exhaustive search.

    Order 3 is excluded there: those paths are the stars of order 3, which a
    directed triangle avoids, so they get the star threshold 4.
    """
    return bruteforce_embedder(T, 4 if T.k == 3 else T.k, "two-block", cap)


def restrict_embedder(sub: Embedder, T: OrientedTree) -> Embedder:
    """Embedder for a subtree of ``sub.tree`` with the same threshold."""
    keep = set(T.vertices)

    def run(D):
        m = sub(D)
        return None if m is None else {t: h for t, h in m.items() if t in keep}

    return Embedder(T, sub.threshold, run, f"restrict({sub.name})", sub.trace)


# ---------------------------------------------------------------------------
# gluing steps as embedders


def directed_gluing_embedder(sub: Embedder, path: RootedOrientedPath, slack: int = 1, search: bool = False) -> Embedder:
    T = glued_tree(sub.tree, path)
    c = sub.threshold + sub.tree.k + 2 * path.length - 3 + slack
    return Embedder(T, c, lambda D: glue_directed_path(D, sub, path, slack, search), "glue-directed", sub.trace + (c,))


def oriented_gluing_embedder(sub: Embedder, Q: RootedOrientedPath) -> Embedder:
    T = glued_tree(sub.tree, Q)
    ell = Q.length
    c = sub.threshold + sub.tree.k + ell * (ell + 1) // 2 - 1
    return Embedder(T, c, lambda D: glue_oriented_path(D, sub, Q), "glue-oriented", sub.trace + (c,))


def leaves_embedder(sub: Embedder, T: OrientedTree, mode: str, cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    c = sub.threshold + 2 * T.k - 4
    return Embedder(T, c, lambda D: glue_leaves_fallback(D, sub, T, mode, cap), f"glue-{mode}-leaves", sub.trace + (c,))


# ---------------------------------------------------------------------------
# b-block paths


def as_rooted_path(P) -> RootedOrientedPath:
    if isinstance(P, RootedOrientedPath):
        return P
    order = P.path_order()
    return RootedOrientedPath.from_tree(P, order[0])


def _drop_last_block(Q: RootedOrientedPath, slack: int, cap: int) -> Embedder:
    last = blocks(Q)[-1]
    sub = bblock_embedder(Q.sub(0, Q.length - last.length), slack, cap)
    return directed_gluing_embedder(sub, last, slack, search=True)


def _first_success(plans: list[Embedder], name: str) -> Embedder:
    best = min(plans, key=lambda E: E.threshold)

    def run(D):
        for E in plans:
            m = E(D)
            if m is not None:
                return m
        return None

    return Embedder(best.tree, best.threshold, run, name, best.trace)


def bblock_embedder(P, slack: int = 1, cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    """Start from a 2-block piece and glue the remaining blocks back one at a time.

    Either end-block may be the one removed; both orders are tried, and the
    promised threshold is the better of the two.
    """
    Q = as_rooted_path(P)
    T = Q.as_tree()
    if Q.length == 0:
        return point_embedder(T)
    bl = blocks(Q)
    if len(bl) == 1:
        return directed_path_embedder(T)
    if len(bl) == 2:
        return two_block_embedder(T, cap)
    return _first_success([_drop_last_block(Q, slack, cap), _drop_last_block(Q.reversed(), slack, cap)], "bblock")


def _run_checked(D: Digraph, E: Embedder, chi: int | None) -> dict | None:
    m = E(D)
    if m is not None:
        errs = embedding_violations(D, E.tree, m)
        if errs:
            raise AssertionError(f"{E.name} returned an invalid embedding: {errs}")
        return m
    if chi is not None and chi >= E.threshold:
        raise BoundViolation(f"{E.name} failed on a host with χ={chi} >= {E.threshold}")
    return None


def _precondition(D: Digraph, chi: int | None, check: bool, bound, what: str) -> int | None:
    if chi is None and check:
        chi = chromatic_number(D) if D.n else 0
    if chi is not None and chi < bound:
        raise ValueError(f"{what} needs χ(D) >= {bound}, host has {chi}")
    return chi


def embed_bblock_path(D: Digraph, P, slack: int = 1, chi: int | None = None, check: bool = True) -> dict | None:
    Q = as_rooted_path(P)
    b = len(blocks(Q))
    if b < 2:
        raise ValueError("b-block pipeline needs at least two blocks")
    chi = _precondition(D, chi, check, bblock_bound(b, Q.length + 1), "b-block path")
    return _run_checked(D, bblock_embedder(Q, slack), chi)


# ---------------------------------------------------------------------------
# arborescences


def leaf_branch_arbo(k: int, p: int) -> bool:
    """p >= sqrt(4k/3), exactly."""
    return 3 * p * p >= 4 * k


def leaf_branch_main(k: int, p: int) -> bool:
    """p >= sqrt(5k/6), exactly."""
    return 6 * p * p >= 5 * k


def arborescence_embedder(T: OrientedTree, slack: int = 1, cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    info = T.arborescence_root()
    if info is None:
        raise ValueError("not an arborescence")
    root, kind = info
    if T.k == 1:
        return point_embedder(T)
    if is_star(T) is not None:
        return star_embedder(T)
    out, inn = leaf_sets(T)
    mode = "out" if kind == "out" else "in"
    leaves = out if kind == "out" else inn
    if leaf_branch_arbo(T.k, len(leaves)):
        sub = arborescence_embedder(strip_leaves(T, mode), slack, cap)
        return leaves_embedder(sub, T, mode, cap)
    dec = descending_decomposition(T, root)
    first = dec.paths[0]
    E = directed_path_embedder(first.as_tree())
    E = Embedder(E.tree, E.threshold, E.run, E.name, (E.threshold,))
    for P in dec.paths[1:]:
        E = directed_gluing_embedder(E, P, slack, search=True)
    return E


def embed_arborescence(D: Digraph, T: OrientedTree, slack: int = 1, chi: int | None = None, check: bool = True) -> dict | None:
    if T.arborescence_root() is None:
        raise ValueError("not an arborescence")
    chi = _precondition(D, chi, check, arborescence_bound(T.k), "arborescence")
    return _run_checked(D, arborescence_embedder(T, slack), chi)


# ---------------------------------------------------------------------------
# general oriented trees


def oriented_tree_embedder(T: OrientedTree, cap: int = DEFAULT_BRUTE_CAP) -> Embedder:
    if T.k == 1:
        return point_embedder(T)
    if is_star(T) in (OUT_STAR, IN_STAR):
        return star_embedder(T)
    if T.is_directed_path():
        return directed_path_embedder(T)
    out, inn = leaf_sets(T)
    if leaf_branch_main(T.k, len(out) + len(inn)):
        first, second = ("out", "in") if out else ("in", "out")
        T1 = strip_leaves(T, first)
        if is_star(T1) is not None:
            E1 = star_embedder(T1)
        else:
            core = strip_leaves(T, "all")
            T2 = strip_leaves(T1, second)
            base = oriented_tree_embedder(core, cap)
            E0 = base if set(T2.vertices) == set(core.vertices) else restrict_embedder(base, T2)
            E1 = leaves_embedder(E0, T1, second, cap)
        return leaves_embedder(E1, T, first, cap)
    ell = chunk_length(T.k)
    dec = chunk_paths(descending_decomposition(T, T.vertices[0]), ell)
    E = point_embedder(OrientedTree.single(dec.paths[0].root))
    for Q in dec.paths:
        E = oriented_gluing_embedder(E, Q)
    return Embedder(E.tree, E.threshold, E.run, "oriented-paths", E.trace)


def path_branch_chain(T: OrientedTree) -> list[int]:
    """Bounds ``c_1..c_m`` of the path-gluing branch, all pieces charged at the chunk length."""
    ell = chunk_length(T.k)
    dec = chunk_paths(descending_decomposition(T, T.vertices[0]), ell)
    step = ell * (ell + 1) // 2
    c = [step + 1]
    size = dec.paths[0].length + 1
    for Q in dec.paths[1:]:
        c.append(c[-1] + size + step - 1)
        size += Q.length
    return c


def embed_oriented_tree(D: Digraph, T: OrientedTree, chi: int | None = None, check: bool = True) -> dict | None:
    chi = _precondition(D, chi, check, main_bound(T.k), "oriented tree")
    return _run_checked(D, oriented_tree_embedder(T), chi)
