"""Simple digraphs on vertices ``0..n-1`` with bitset adjacency.

Besides the container itself this module holds the handful of exact
primitives every construction in the package leans on: chromatic number of
the underlying graph, acyclicity with witnesses, in/out-kernels of DAGs,
maximal acyclic extension and digon collapse.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

DEFAULT_CHI_CAP = 64


class NotADAGError(ValueError):
    """Raised when an operation that needs an acyclic digraph gets a cyclic one."""


class InstanceTooLargeError(ValueError):
    """Raised when an exact routine is asked to go past its vertex cap."""


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Digraph:
    """A simple digraph. Digons are allowed unless ``oriented`` is set."""

    n: int
    arcs: frozenset = frozenset()
    oriented: bool = False
    _out: tuple = field(init=False, repr=False, compare=False)
    _in: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        out = [0] * self.n
        inn = [0] * self.n
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        if self.oriented:
            for u, v in arcs:
                if (v, u) in arcs:
                    raise ValueError(f"digon {{{u}, {v}}} in a digraph flagged oriented")
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "_out", tuple(out))
        object.__setattr__(self, "_in", tuple(inn))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], oriented: bool = False) -> "Digraph":
        return cls(n, frozenset(arcs), oriented)

    def __len__(self) -> int:
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def adj_mask(self, v: int) -> int:
        return self._out[v] | self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def out_neighbours(self, v: int) -> list[int]:
        return list(bits(self._out[v]))

    def in_neighbours(self, v: int) -> list[int]:
        return list(bits(self._in[v]))

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def digons(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in self.arcs if u < v and (v, u) in self.arcs)

    def is_oriented(self) -> bool:
        return not any(self._out[u] & self._in[u] for u in range(self.n))

    def reverse(self) -> "Digraph":
        return reverse(self)


@dataclass(frozen=True)
class Colouring:
    colour: tuple
    num_colours: int

    def is_proper(self, D: Digraph) -> bool:
        if len(self.colour) != D.n:
            return False
        if any(self.colour[u] == self.colour[v] for u, v in D.arcs):
            return False
        return len(set(self.colour)) == self.num_colours


def reverse(D: Digraph) -> Digraph:
    return Digraph(D.n, frozenset((v, u) for u, v in D.arcs), D.oriented)


def induced(D: Digraph, S: Iterable[int]) -> tuple[Digraph, tuple]:
    """Subdigraph induced by ``S``, relabelled ``0..|S|-1`` in ascending order.

    Returns ``(sub, index)`` where ``index[i]`` is the original vertex of ``i``.
    """
    index = tuple(sorted(set(S)))
    for v in index:
        if not 0 <= v < D.n:
            raise ValueError(f"vertex {v} out of range for n={D.n}")
    pos = {v: i for i, v in enumerate(index)}
    mask = to_mask(index)
    arcs = []
    for u in index:
        for v in bits(D.out_mask(u) & mask):
            arcs.append((pos[u], pos[v]))
    return Digraph(len(index), frozenset(arcs), D.oriented), index


def digon_collapse(D: Digraph, rule: Callable[[int, int], bool] | None = None) -> Digraph:
    """Replace every digon by one of its arcs.

    ``rule(u, v)`` is asked for each digon with ``u < v`` and should return
    True to keep ``(u, v)``; the default keeps the lower-endpoint-first arc.
    """
    keep = []
    for u, v in D.arcs:
        if not D.has_arc(v, u):
            keep.append((u, v))
            continue
        a, b = min(u, v), max(u, v)
        forward = True if rule is None else bool(rule(a, b))
        if (u, v) == ((a, b) if forward else (b, a)):
            keep.append((u, v))
    return Digraph(D.n, frozenset(keep), oriented=True)


# ---------------------------------------------------------------------------
# acyclicity


def _topo_within(D: Digraph, mask: int) -> tuple[list[int], int]:
    """Kahn's algorithm restricted to ``mask``; returns (order, leftover mask)."""
    indeg = {v: (D.in_mask(v) & mask).bit_count() for v in bits(mask)}
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    remaining = mask
    heapq.heapify(ready)
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        remaining &= ~(1 << v)
        for w in bits(D.out_mask(v) & remaining):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    return order, remaining


def _cycle_in(D: Digraph, mask: int) -> tuple:
    # every vertex of mask has an in-neighbour inside mask; walk backwards
    v = (mask & -mask).bit_length() - 1
    seen = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = (D.in_mask(v) & mask & -(D.in_mask(v) & mask)).bit_length() - 1
    cyc = walk[seen[v]:][::-1]
    i = cyc.index(min(cyc))
    return tuple(cyc[i:] + cyc[:i])


def acyclic_witness(D: Digraph, S: Iterable[int] | None = None) -> tuple[bool, tuple]:
    """Classify ``D`` (or ``D[S]``) as acyclic or not.

    Returns ``(True, topological_order)`` or ``(False, cycle)`` where the cycle
    is listed in arc order starting from its smallest vertex.
    """
    mask = D.all_mask if S is None else to_mask(S)
    order, rest = _topo_within(D, mask)
    if rest:
        return False, _cycle_in(D, rest)
    return True, tuple(order)


def is_acyclic(D: Digraph, S: Iterable[int] | None = None) -> bool:
    mask = D.all_mask if S is None else to_mask(S)
    return not _topo_within(D, mask)[1]


def topological_order(D: Digraph) -> tuple:
    ok, w = acyclic_witness(D)
    if not ok:
        raise NotADAGError(f"directed cycle {w}")
    return w


def reaches(D: Digraph, sources: int, targets: int, within: int) -> bool:
    """Whether some vertex of ``sources`` reaches ``targets`` inside ``within`` (all masks)."""
    frontier = sources & within
    seen = frontier
    while frontier:
        if frontier & targets:
            return True
        nxt = 0
        for v in bits(frontier):
            nxt |= D.out_mask(v)
        frontier = nxt & within & ~seen
        seen |= frontier
    return False


def cycle_through(D: Digraph, Y: int, x: int) -> tuple | None:
    """Shortest directed cycle through ``x`` in ``D[Y + x]`` as a vertex tuple from ``x``.

    ``Y`` is a mask not containing ``x``. Returns None when no cycle exists.
    """
    start = D.out_mask(x) & Y
    target = D.in_mask(x) & Y
    if not start or not target:
        return None
    parent = {v: None for v in bits(start)}
    frontier = start
    seen = start
    while frontier:
        hit = frontier & target
        if hit:
            v = (hit & -hit).bit_length() - 1
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return (x, *reversed(path))
        nxt = 0
        for v in bits(frontier):
            new = D.out_mask(v) & Y & ~seen & ~nxt
            for w in bits(new):
                parent[w] = v
            nxt |= new
        seen |= nxt
        frontier = nxt
    return None


def maximal_acyclic_extension(D: Digraph, seed: Iterable[int] = (), forbidden: Iterable[int] = ()) -> frozenset:
    """Grow ``seed`` greedily (ascending index) into a maximal acyclic set avoiding ``forbidden``."""
    Y = to_mask(seed)
    F = to_mask(forbidden)
    if Y & F:
        raise ValueError("seed and forbidden sets intersect")
    if not is_acyclic(D, bits(Y)):
        raise NotADAGError(f"seed induces a directed cycle {acyclic_witness(D, bits(Y))[1]}")
    for v in range(D.n):
        bit = 1 << v
        if (Y | F) & bit:
            continue
        if not reaches(D, D.out_mask(v) & Y, D.in_mask(v), Y):
            Y |= bit
    return frozenset(bits(Y))


def sinks(D: Digraph, S: Iterable[int] | None = None) -> list[int]:
    mask = D.all_mask if S is None else to_mask(S)
    return [v for v in bits(mask) if not D.out_mask(v) & mask]


def sources(D: Digraph, S: Iterable[int] | None = None) -> list[int]:
    mask = D.all_mask if S is None else to_mask(S)
    return [v for v in bits(mask) if not D.in_mask(v) & mask]


# ---------------------------------------------------------------------------
# kernels


def out_kernel(D: Digraph, within: Iterable[int] | None = None) -> frozenset:
    """Independent set out-dominating ``D``: every other vertex has an out-neighbour in it.

    Reverse-topological sweep over ``D`` (or ``D[within]``); raises
    :class:`NotADAGError` on cyclic input.
    """
    mask = D.all_mask if within is None else to_mask(within)
    order, rest = _topo_within(D, mask)
    if rest:
        raise NotADAGError(f"directed cycle {_cycle_in(D, rest)}")
    K = 0
    for v in reversed(order):
        if not D.out_mask(v) & K:
            K |= 1 << v
    return frozenset(bits(K))


def in_kernel(D: Digraph, within: Iterable[int] | None = None) -> frozenset:
    """Independent set in-dominating ``D``: every other vertex has an in-neighbour in it."""
    mask = D.all_mask if within is None else to_mask(within)
    order, rest = _topo_within(D, mask)
    if rest:
        raise NotADAGError(f"directed cycle {_cycle_in(D, rest)}")
    K = 0
    for v in order:
        if not D.in_mask(v) & K:
            K |= 1 << v
    return frozenset(bits(K))


def is_out_kernel(D: Digraph, K: Iterable[int]) -> bool:
    Km = to_mask(K)
    if any(D.adj_mask(v) & Km for v in bits(Km)):
        return False
    return all(D.out_mask(v) & Km for v in range(D.n) if not Km >> v & 1)


def is_in_kernel(D: Digraph, K: Iterable[int]) -> bool:
    return is_out_kernel(reverse(D), K)


# ---------------------------------------------------------------------------
# colouring


def _greedy_clique(adj: list[int], n: int) -> int:
    best = 0
    for s in range(n):
        cand = adj[s]
        size = 1
        while cand:
            v = max(bits(cand), key=lambda u: (adj[u] & cand).bit_count())
            size += 1
            cand &= adj[v]
        best = max(best, size)
    return best


def _dsatur(adj: list[int], n: int) -> list[int]:
    colour = [-1] * n
    classes: list[int] = []
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = sum(1 for c in classes if adj[v] & c)
            key = (sat, adj[v].bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        for c, cls in enumerate(classes):
            if not adj[best_v] & cls:
                colour[best_v] = c
                classes[c] |= 1 << best_v
                break
        else:
            colour[best_v] = len(classes)
            classes.append(1 << best_v)
    return colour


def optimal_colouring(D: Digraph, cap: int = DEFAULT_CHI_CAP) -> Colouring:
    """Exact minimum colouring of the underlying graph (DSATUR branch and bound)."""
    n = D.n
    if n == 0:
        raise ValueError("chromatic number of the empty digraph is undefined")
    if n > cap:
        raise InstanceTooLargeError(f"{n} vertices exceeds exact colouring cap {cap}")
    adj = [D.adj_mask(v) for v in range(n)]
    best = _dsatur(adj, n)
    best_k = max(best) + 1
    lower = _greedy_clique(adj, n)
    if best_k > lower:
        colour = [-1] * n
        classes: list[int] = []

        def search(coloured: int, uncol: int) -> bool:
            nonlocal best, best_k
            if not uncol:
                best = colour.copy()
                best_k = len(classes)
                return best_k == lower
            pick, pick_key, pick_forb = -1, None, 0
            for v in bits(uncol):
                forb = 0
                for c, cls in enumerate(classes):
                    if adj[v] & cls:
                        forb |= 1 << c
                key = (forb.bit_count(), (adj[v] & uncol).bit_count())
                if pick_key is None or key > pick_key:
                    pick, pick_key, pick_forb = v, key, forb
            rest = uncol & ~(1 << pick)
            for c in range(len(classes)):
                if pick_forb >> c & 1:
                    continue
                colour[pick] = c
                classes[c] |= 1 << pick
                done = search(coloured + 1, rest)
                classes[c] &= ~(1 << pick)
                if done:
                    return True
            if len(classes) + 1 < best_k:
                colour[pick] = len(classes)
                classes.append(1 << pick)
                done = search(coloured + 1, rest)
                classes.pop()
                if done:
                    return True
            colour[pick] = -1
            return False

        search(0, (1 << n) - 1)
    return Colouring(tuple(best), best_k)


def chromatic_number(D: Digraph, cap: int = DEFAULT_CHI_CAP) -> int:
    return optimal_colouring(D, cap).num_colours


def chromatic_number_of(D: Digraph, S: Iterable[int], cap: int = DEFAULT_CHI_CAP) -> int:
    """χ(D[S]), with 0 for the empty set."""
    S = list(S)
    if not S:
        return 0
    return chromatic_number(induced(D, S)[0], cap)
