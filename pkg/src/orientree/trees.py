"""Oriented trees, rooted oriented paths and path decompositions.

Trees keep whatever integer labels they were built with, so a subtree of
``T`` shares labels with ``T``; embeddings are plain ``{label: host vertex}``
dicts and compose across gluing steps without relabelling.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_ENUM_CAP = 8

OUT_STAR = "out_star"
IN_STAR = "in_star"


@dataclass(frozen=True)
class OrientedTree:
    vertices: tuple
    arcs: frozenset
    root: int | None = None
    _nbrs: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        if not verts:
            raise ValueError("a tree needs at least one vertex")
        vs = set(verts)
        nbrs = {v: [] for v in verts}
        for u, v in arcs:
            if u not in vs or v not in vs:
                raise ValueError(f"arc ({u}, {v}) leaves the vertex set")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (v, u) in arcs:
                raise ValueError(f"digon {{{u}, {v}}} in an oriented tree")
            nbrs[u].append(v)
            nbrs[v].append(u)
        if len(arcs) != len(verts) - 1 or not _connected(verts, nbrs):
            raise ValueError("underlying graph is not a tree")
        if self.root is not None and self.root not in vs:
            raise ValueError(f"root {self.root} is not a vertex")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_nbrs", {v: tuple(sorted(ns)) for v, ns in nbrs.items()})

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], root: int | None = None) -> "OrientedTree":
        return cls(tuple(range(n)), frozenset(arcs), root)

    @classmethod
    def single(cls, v: int = 0) -> "OrientedTree":
        return cls((v,), frozenset())

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbours(self, v: int) -> tuple:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def out_neighbours(self, v: int) -> list:
        return [w for w in self._nbrs[v] if (v, w) in self.arcs]

    def in_neighbours(self, v: int) -> list:
        return [w for w in self._nbrs[v] if (w, v) in self.arcs]

    def with_root(self, r: int | None) -> "OrientedTree":
        return OrientedTree(self.vertices, self.arcs, r)

    def subtree(self, keep: Iterable[int]) -> "OrientedTree":
        keep = set(keep)
        arcs = frozenset((u, v) for u, v in self.arcs if u in keep and v in keep)
        root = self.root if self.root in keep else None
        return OrientedTree(tuple(keep), arcs, root)

    def relabelled(self) -> tuple["OrientedTree", dict]:
        """Copy labelled ``0..k-1`` plus the old->new map."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        arcs = frozenset((pos[u], pos[v]) for u, v in self.arcs)
        root = None if self.root is None else pos[self.root]
        return OrientedTree(tuple(range(self.k)), arcs, root), pos

    def reversed(self) -> "OrientedTree":
        return OrientedTree(self.vertices, frozenset((v, u) for u, v in self.arcs), self.root)

    def leaves(self) -> list:
        if self.k == 1:
            return []
        return [v for v in self.vertices if self.degree(v) == 1]

    def is_directed_path(self) -> bool:
        if self.k <= 2:
            return True
        if any(self.degree(v) > 2 for v in self.vertices):
            return False
        return all(len(self.out_neighbours(v)) <= 1 and len(self.in_neighbours(v)) <= 1 for v in self.vertices)

    def is_path(self) -> bool:
        return all(self.degree(v) <= 2 for v in self.vertices)

    def path_order(self) -> list:
        """Vertices of a path tree from its smaller end."""
        if not self.is_path():
            raise ValueError("not a path")
        if self.k == 1:
            return list(self.vertices)
        start = min(self.leaves())
        order = [start]
        prev = None
        while len(order) < self.k:
            cur = order[-1]
            nxt = [w for w in self._nbrs[cur] if w != prev]
            prev = cur
            order.append(nxt[0])
        return order

    def arborescence_root(self) -> tuple[int, str] | None:
        """``(root, "out"|"in")`` if this is an out- or in-arborescence."""
        indeg = {v: len(self.in_neighbours(v)) for v in self.vertices}
        outdeg = {v: len(self.out_neighbours(v)) for v in self.vertices}
        if all(d <= 1 for d in indeg.values()):
            return next(v for v in self.vertices if indeg[v] == 0), "out"
        if all(d <= 1 for d in outdeg.values()):
            return next(v for v in self.vertices if outdeg[v] == 0), "in"
        return None

    @cached_property
    def canonical(self) -> str:
        return canonical_form(self)


def _connected(verts, nbrs) -> bool:
    seen = {verts[0]}
    todo = [verts[0]]
    while todo:
        v = todo.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(verts)


@dataclass(frozen=True)
class RootedOrientedPath:
    """Oriented path stored from its root: ``vertices[0]`` is the root.

    ``forward[i]`` is True when the arc between ``vertices[i]`` and
    ``vertices[i+1]`` points away from the root.
    """

    vertices: tuple
    forward: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "forward", tuple(bool(f) for f in self.forward))
        if len(self.forward) != len(self.vertices) - 1:
            raise ValueError("need exactly one direction per step")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")

    @classmethod
    def from_directions(cls, forward: Sequence[bool], start: int = 0) -> "RootedOrientedPath":
        return cls(tuple(range(start, start + len(forward) + 1)), tuple(forward))

    @classmethod
    def from_tree(cls, T: OrientedTree, root: int) -> "RootedOrientedPath":
        order = T.path_order()
        if order[0] != root:
            order.reverse()
        if order[0] != root:
            raise ValueError(f"{root} is not an end of the path")
        fwd = tuple((a, b) in T.arcs for a, b in zip(order, order[1:]))
        return cls(tuple(order), fwd)

    @property
    def length(self) -> int:
        return len(self.forward)

    @property
    def root(self) -> int:
        return self.vertices[0]

    @property
    def arcs(self) -> frozenset:
        return frozenset(
            (a, b) if f else (b, a) for a, b, f in zip(self.vertices, self.vertices[1:], self.forward)
        )

    def is_directed(self) -> bool:
        return len(set(self.forward)) <= 1

    def tail(self) -> "RootedOrientedPath":
        """The path minus its root, rooted at the root's neighbour."""
        if not self.forward:
            raise ValueError("zero-length path has no tail")
        return RootedOrientedPath(self.vertices[1:], self.forward[1:])

    def sub(self, i: int, j: int) -> "RootedOrientedPath":
        """Subpath from position ``i`` to ``j`` inclusive, rooted at position ``i``."""
        return RootedOrientedPath(self.vertices[i : j + 1], self.forward[i:j])

    def reversed(self) -> "RootedOrientedPath":
        """Same path rooted at the other end."""
        return RootedOrientedPath(self.vertices[::-1], tuple(not f for f in self.forward[::-1]))

    def as_tree(self) -> OrientedTree:
        return OrientedTree(self.vertices, self.arcs, self.root)


@dataclass(frozen=True)
class PathDecomposition:
    """Ordered paths; every path after the first hangs off the earlier ones at its root."""

    paths: tuple
    root: int | None = None

    def __len__(self) -> int:
        return len(self.paths)

    def attach(self, i: int) -> int:
        return self.paths[i].root

    def arcs(self) -> frozenset:
        out = set()
        for P in self.paths:
            out |= P.arcs
        return frozenset(out)

    def violations(self, T: OrientedTree | None = None) -> list[str]:
        errs = []
        seen_arcs: set = set()
        seen_verts: set = set()
        for i, P in enumerate(self.paths):
            if seen_arcs & P.arcs:
                errs.append(f"path {i} shares arcs with earlier paths")
            seen_arcs |= P.arcs
            inter = seen_verts & set(P.vertices)
            if i == 0:
                if self.root is not None and P.root != self.root:
                    errs.append("first path does not start at the root")
            elif inter != {P.root}:
                errs.append(f"path {i} meets earlier paths in {sorted(inter)}, not just its start")
            seen_verts |= set(P.vertices)
        if T is not None:
            if seen_arcs != set(T.arcs):
                errs.append("union of paths differs from the tree")
            if seen_verts != set(T.vertices):
                errs.append("paths do not cover every vertex")
        return errs


# ---------------------------------------------------------------------------


def leaf_sets(T: OrientedTree) -> tuple[frozenset, frozenset]:
    """``(out_leaves, in_leaves)``: a leaf is an out-leaf when its arc points at it."""
    if T.k < 2:
        raise ValueError("leaf sets need a tree with at least two vertices")
    out, inn = set(), set()
    for v in T.leaves():
        (u,) = T.neighbours(v)
        (out if (u, v) in T.arcs else inn).add(v)
    return frozenset(out), frozenset(inn)


def strip_leaves(T: OrientedTree, mode: str = "all") -> OrientedTree:
    out, inn = leaf_sets(T)
    drop = {"out": out, "in": inn, "all": out | inn}[mode]
    keep = set(T.vertices) - drop
    if not keep:
        raise ValueError(f"stripping {mode}-leaves empties the tree")
    if T.k == 2 and mode == "all":
        raise ValueError("stripping all leaves of a single arc empties the tree")
    return T.subtree(keep)


def blocks(P: RootedOrientedPath) -> list[RootedOrientedPath]:
    """Maximal directed runs of ``P`` in order from the root."""
    if P.length == 0:
        raise ValueError("a zero-length path has no blocks")
    out = []
    start = 0
    for i in range(1, P.length + 1):
        if i == P.length or P.forward[i] != P.forward[start]:
            out.append(P.sub(start, i))
            start = i
    return out


def is_star(T: OrientedTree) -> str | None:
    """Classify ``T`` as an out-star, an in-star or neither.

    Orders 1 and 2 are reported as out-stars by convention.
    """
    if T.k <= 2:
        return OUT_STAR
    centre = max(T.vertices, key=T.degree)
    if T.degree(centre) != T.k - 1:
        return None
    if len(T.out_neighbours(centre)) == T.k - 1:
        return OUT_STAR
    if len(T.in_neighbours(centre)) == T.k - 1:
        return IN_STAR
    return None


def _rooted_children(T: OrientedTree, r: int) -> tuple[dict, dict]:
    parent = {r: None}
    children = {v: [] for v in T.vertices}
    q = deque([r])
    while q:
        v = q.popleft()
        for w in T.neighbours(v):
            if w not in parent:
                parent[w] = v
                children[v].append(w)
                q.append(w)
    return parent, children


def descending_decomposition(T: OrientedTree, r: int | None = None) -> PathDecomposition:
    """Split ``T`` rooted at ``r`` into one descending path per leaf.

    Leaves are taken in ascending label order and the root never counts as a
    leaf, even when it has degree one.
    """
    if r is None:
        r = T.root if T.root is not None else T.vertices[0]
    if r not in T._nbrs:
        raise ValueError(f"{r} is not a vertex of the tree")
    parent, children = _rooted_children(T, r)
    leaves = sorted(v for v in T.vertices if v != r and not children[v])
    if not leaves:
        raise ValueError("a single-vertex tree has no descending paths")
    covered = {r}
    paths = []
    for leaf in leaves:
        chain = [leaf]
        while chain[-1] not in covered:
            chain.append(parent[chain[-1]])
        chain.reverse()
        covered.update(chain)
        fwd = tuple((a, b) in T.arcs for a, b in zip(chain, chain[1:]))
        paths.append(RootedOrientedPath(tuple(chain), fwd))
    return PathDecomposition(tuple(paths), r)


def chunk_paths(dec: PathDecomposition, length: int) -> PathDecomposition:
    """Cut every path into consecutive pieces of ``length`` arcs (last piece may be shorter)."""
    if length < 1:
        raise ValueError("chunk length must be positive")
    out = []
    for P in dec.paths:
        for i in range(0, P.length, length):
            out.append(P.sub(i, min(i + length, P.length)))
    return PathDecomposition(tuple(out), dec.root)


def chunk_length(k: int) -> int:
    """``ceil(sqrt(6k/5))`` in exact integer arithmetic."""
    ell = math.isqrt(6 * k // 5)
    while 5 * ell * ell < 6 * k:
        ell += 1
    while ell > 1 and 5 * (ell - 1) ** 2 >= 6 * k:
        ell -= 1
    return ell


# ---------------------------------------------------------------------------
# isomorphism classes


def _encode(T: OrientedTree, v: int, parent: int | None) -> str:
    parts = []
    for w in T.neighbours(v):
        if w == parent:
            continue
        tag = "+" if (v, w) in T.arcs else "-"
        parts.append(tag + _encode(T, w, v))
    return "(" + "".join(sorted(parts)) + ")"


def canonical_form(T: OrientedTree) -> str:
    """Isomorphism invariant: rooted encoding minimised over all roots."""
    return min(_encode(T, r, None) for r in T.vertices)


def enumerate_oriented_trees(k: int, cap: int = DEFAULT_ENUM_CAP) -> list[OrientedTree]:
    """One oriented tree of order ``k`` per isomorphism class, labelled ``0..k-1``."""
    if k < 1:
        raise ValueError("order must be positive")
    if k > cap:
        raise ValueError(f"order {k} exceeds enumeration cap {cap}")
    layer = {canonical_form(OrientedTree.single()): OrientedTree.single()}
    for n in range(1, k):
        nxt = {}
        for T in layer.values():
            for v in T.vertices:
                for arc in ((v, n), (n, v)):
                    U = OrientedTree(T.vertices + (n,), T.arcs | {arc})
                    nxt.setdefault(canonical_form(U), U)
        layer = nxt
    return [layer[c] for c in sorted(layer)]


def out_star(k: int) -> OrientedTree:
    return OrientedTree.from_arcs(k, [(0, i) for i in range(1, k)], root=0)


def in_star(k: int) -> OrientedTree:
    return OrientedTree.from_arcs(k, [(i, 0) for i in range(1, k)], root=0)


def directed_path(k: int) -> OrientedTree:
    return OrientedTree.from_arcs(k, [(i, i + 1) for i in range(k - 1)], root=0)


def path_from_directions(forward: Sequence[bool]) -> OrientedTree:
    return RootedOrientedPath.from_directions(forward).as_tree()
