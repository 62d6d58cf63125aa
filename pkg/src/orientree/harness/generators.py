"""Seeded host families: random digraphs, tournaments, DAGs."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..digraph import Digraph

KINDS = (
    "random_gnp_digraph",
    "random_tournament",
    "regular_tournament",
    "circulant_tournament",
    "layered_dag",
    "random_dag",
    "transitive_tournament",
)


@dataclass(frozen=True)
class InstanceFamily:
    kind: str
    n: int
    p: float = 0.5
    seed: int = 0
    offsets: tuple | None = None
    layers: int | None = None

    def describe(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if v is not None}
        if "offsets" in d:
            d["offsets"] = list(d["offsets"])
        return d


def random_gnp_digraph(n: int, p: float, seed: int) -> Digraph:
    """Every ordered pair becomes an arc independently with probability ``p`` (digons allowed)."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    rows, cols = np.nonzero(mask)
    return Digraph(n, frozenset(zip(rows.tolist(), cols.tolist())))


def random_tournament(n: int, seed: int) -> Digraph:
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    flip = rng.random(iu.size) < 0.5
    arcs = [(j, i) if f else (i, j) for i, j, f in zip(iu.tolist(), ju.tolist(), flip.tolist())]
    return Digraph(n, frozenset(arcs), oriented=True)


def circulant_tournament(n: int, offsets) -> Digraph:
    """``i -> i + s (mod n)`` for each offset ``s``; the offsets must pick one of each ``{s, -s}``."""
    S = {int(s) % n for s in offsets}
    if 0 in S or any((-s) % n in S for s in S) or len(S) != (n - 1) // 2 or n % 2 == 0:
        raise ValueError("offsets must choose exactly one of s, -s for every nonzero s mod odd n")
    return Digraph(n, frozenset((i, (i + s) % n) for i in range(n) for s in S), oriented=True)


def regular_tournament(n: int) -> Digraph:
    if n < 1 or n % 2 == 0:
        raise ValueError("regular tournaments need odd order")
    return circulant_tournament(n, range(1, (n - 1) // 2 + 1))


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)), oriented=True)


def random_dag(n: int, p: float, seed: int) -> Digraph:
    """Forward arcs over a random vertex permutation, each with probability ``p``."""
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n).tolist()
    keep = rng.random((n, n)) < p
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if keep[i, j]]
    return Digraph(n, frozenset(arcs), oriented=True)


def layered_dag(n: int, layers: int, p: float, seed: int) -> Digraph:
    """Vertices spread over ``layers`` levels; arcs only go to strictly later levels."""
    if layers < 1:
        raise ValueError("need at least one layer")
    rng = np.random.default_rng(seed)
    level = rng.integers(0, layers, size=n).tolist()
    keep = rng.random((n, n)) < p
    arcs = [(u, v) for u in range(n) for v in range(n) if level[u] < level[v] and keep[u, v]]
    return Digraph(n, frozenset(arcs), oriented=True)


def generate(family: InstanceFamily) -> Digraph:
    kind, n = family.kind, family.n
    if n < 0:
        raise ValueError("order must be non-negative")
    if kind == "random_gnp_digraph":
        if not 0 <= family.p <= 1:
            raise ValueError("arc probability must lie in [0, 1]")
        return random_gnp_digraph(n, family.p, family.seed)
    if kind == "random_tournament":
        return random_tournament(n, family.seed)
    if kind == "regular_tournament":
        return regular_tournament(n)
    if kind == "circulant_tournament":
        if family.offsets is None:
            raise ValueError("circulant tournament needs offsets")
        return circulant_tournament(n, family.offsets)
    if kind == "layered_dag":
        return layered_dag(n, family.layers or max(1, n // 3), family.p, family.seed)
    if kind == "random_dag":
        return random_dag(n, family.p, family.seed)
    if kind == "transitive_tournament":
        return transitive_tournament(n)
    raise ValueError(f"unknown instance family {kind!r}")
