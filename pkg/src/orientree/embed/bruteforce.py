"""Exhaustive backtracking search for a copy of a tree."""

from __future__ import annotations

from collections import deque

from ..digraph import Digraph, InstanceTooLargeError, bits
from ..trees import OrientedTree

DEFAULT_BRUTE_CAP = 32


def brute_force_embed(
    D: Digraph,
    T: OrientedTree,
    pin: tuple[int, int] | None = None,
    cap: int = DEFAULT_BRUTE_CAP,
    allowed: int | None = None,
) -> dict | None:
    """Find a copy of ``T`` in ``D`` or prove there is none.

    ``pin=(t, h)`` forces tree vertex ``t`` onto host vertex ``h``;
    ``allowed`` is a bitmask restricting the host vertices usable.
    Search order is deterministic.
    """
    if D.n > cap:
        raise InstanceTooLargeError(f"host of order {D.n} exceeds brute-force cap {cap}")
    if T.k > D.n:
        return None
    allowed = D.all_mask if allowed is None else allowed & D.all_mask
    if pin is not None:
        t0, h0 = pin
        if not allowed >> h0 & 1:
            return None
    else:
        t0 = max(T.vertices, key=lambda v: (T.degree(v), -v))
    order = [t0]
    parent = {t0: None}
    q = deque([t0])
    while q:
        v = q.popleft()
        for w in sorted(T.neighbours(v), key=lambda u: -T.degree(u)):
            if w not in parent:
                parent[w] = v
                order.append(w)
                q.append(w)
    need_out = {t: len(T.out_neighbours(t)) for t in T.vertices}
    need_in = {t: len(T.in_neighbours(t)) for t in T.vertices}
    fwd = {t: parent[t] is not None and (parent[t], t) in T.arcs for t in T.vertices}
    out = [D.out_mask(h) & allowed for h in range(D.n)]
    inn = [D.in_mask(h) & allowed for h in range(D.n)]
    img: dict = {}

    def fits(t, h):
        return out[h].bit_count() >= need_out[t] and inn[h].bit_count() >= need_in[t]

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        t = order[i]
        if i == 0:
            cands = (1 << pin[1]) if pin is not None else allowed
        else:
            p = img[parent[t]]
            cands = (out[p] if fwd[t] else inn[p]) & ~used
        for h in bits(cands):
            if not fits(t, h):
                continue
            img[t] = h
            if rec(i + 1, used | (1 << h)):
                return True
        img.pop(t, None)
        return False

    if rec(0, 0):
        return dict(img)
    return None
