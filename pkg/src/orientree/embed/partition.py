"""Three-way vertex partitions ``(X, Y, Z)`` that drive the path-gluing steps.

``Y`` induces a DAG, every ``x`` in ``X`` sits on a cycle through ``Y`` (so it
has an in- and an out-neighbour there), and ``Z`` has small chromatic number
while still carrying path copies hanging off ``Y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..digraph import (
    Digraph,
    bits,
    chromatic_number_of,
    cycle_through,
    digon_collapse,
    induced,
    is_acyclic,
    maximal_acyclic_extension,
    reverse,
    sinks,
    sources,
    to_mask,
)
from ..trees import RootedOrientedPath
from .dag import embed_tree_in_dag, longest_path

DIRECTED = "directed"
DIRECTED_REVERSED = "directed-reversed"
ORIENTED = "oriented"


@dataclass(frozen=True)
class Partition3:
    X: frozenset
    Y: frozenset
    Z: frozenset
    tag: str
    param: object  # int length for directed tags, RootedOrientedPath for oriented
    host: Digraph = field(repr=False)
    in_witness: dict = field(default_factory=dict, repr=False)
    out_witness: dict = field(default_factory=dict, repr=False)
    paths: dict = field(default_factory=dict, repr=False)

    @property
    def length(self) -> int:
        return self.param.length if isinstance(self.param, RootedOrientedPath) else self.param

    @property
    def z_bound(self) -> int:
        ell = self.length
        return ell * (ell + 1) // 2 if self.tag == ORIENTED else ell

    def violations(self, D: Digraph | None = None, exact_chi: bool = True) -> list[str]:
        """Every invariant the partition promises, checked by direct scan."""
        H = self.host
        errs = []
        if D is not None and not H.arcs <= D.arcs:
            errs.append("host is not a subdigraph of D")
        if self.X & self.Y or self.X & self.Z or self.Y & self.Z:
            errs.append("parts overlap")
        if self.X | self.Y | self.Z != frozenset(range(H.n)):
            errs.append("parts do not cover V(D)")
        for x in self.X:
            ym, yp = self.in_witness.get(x), self.out_witness.get(x)
            if ym not in self.Y or not H.has_arc(ym, x):
                errs.append(f"x={x} lacks a recorded in-neighbour in Y")
            if yp not in self.Y or not H.has_arc(x, yp):
                errs.append(f"x={x} lacks a recorded out-neighbour in Y")
        if not is_acyclic(H, self.Y):
            errs.append("D[Y] has a directed cycle")
        ell = self.length
        if self.tag == DIRECTED:
            for s in sinks(H, self.Y):
                errs += _check_directed(H, self.paths.get(s), s, 0, ell, self.Z, f"sink {s}")
        elif self.tag == DIRECTED_REVERSED:
            for s in sources(H, self.Y):
                errs += _check_directed(H, self.paths.get(s), s, -1, ell, self.Z, f"source {s}")
        else:
            allowed = self.Y | self.Z
            for y in self.Y:
                copy = self.paths.get(y)
                if copy is None or len(copy) != ell + 1 or copy[0] != y:
                    errs.append(f"y={y} has no recorded path copy")
                    continue
                if len(set(copy)) != len(copy) or not set(copy) <= allowed:
                    errs.append(f"copy from y={y} is not injective inside Y+Z")
                for a, b, f in zip(copy, copy[1:], self.param.forward):
                    if not (H.has_arc(a, b) if f else H.has_arc(b, a)):
                        errs.append(f"copy from y={y} misses arc between {a} and {b}")
        if exact_chi and self.Z and chromatic_number_of(H, self.Z) > self.z_bound:
            errs.append(f"χ(D[Z]) exceeds {self.z_bound}")
        return errs

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "length": self.length,
            "X": sorted(self.X),
            "Y": sorted(self.Y),
            "Z": sorted(self.Z),
            "in_witness": {str(k): v for k, v in sorted(self.in_witness.items())},
            "out_witness": {str(k): v for k, v in sorted(self.out_witness.items())},
            "paths": {str(k): list(v) for k, v in sorted(self.paths.items())},
        }


def _check_directed(H, path, s, end, ell, Z, what) -> list[str]:
    if path is None or len(path) != ell + 1 or path[end] != s:
        return [f"{what} has no recorded path of length {ell}"]
    errs = []
    rest = path[1:] if end == 0 else path[:-1]
    if not set(rest) <= Z or len(set(path)) != len(path):
        errs.append(f"{what}: path leaves Z or repeats a vertex")
    if any(not H.has_arc(a, b) for a, b in zip(path, path[1:])):
        errs.append(f"{what}: recorded path is not directed")
    return errs


def _witnesses(G: Digraph, X, Y) -> tuple[dict, dict]:
    ym, yp = {}, {}
    Ym = to_mask(Y)
    for x in sorted(X):
        cyc = cycle_through(G, Ym, x)
        if cyc is None:
            raise AssertionError(f"vertex {x} outside a maximal acyclic set closes no cycle")
        yp[x], ym[x] = cyc[1], cyc[-1]
    return ym, yp


def _forward_levels(G: Digraph, ell: int):
    n = G.n
    Y = maximal_acyclic_extension(G)
    Z: frozenset = frozenset()
    paths = {s: (s,) for s in sinks(G, Y)}
    for _ in range(ell):
        S_prev = frozenset(sinks(G, Y))
        Z = Z | S_prev
        Y = maximal_acyclic_extension(G, Y - S_prev, Z)
        Sm = to_mask(S_prev)
        new = {}
        for s in sinks(G, Y):
            nxt = G.out_mask(s) & Sm
            if not nxt:
                raise AssertionError(f"sink {s} of D[Y] has no out-neighbour among earlier sinks")
            t = (nxt & -nxt).bit_length() - 1
            new[s] = (s,) + paths[t]
        paths = new
    X = frozenset(range(n)) - Y - Z
    return X, Y, Z, paths


@lru_cache(maxsize=512)
def directed_partition(D: Digraph, ell: int, variant: str = "forward") -> Partition3:
    """Partition with sinks (or, reversed, sources) of ``D[Y]`` carrying directed paths into ``Z``.

    ``χ(D[Z]) <= ell``. Digons are collapsed first, and the returned
    partition records that oriented host.
    """
    if ell < 0:
        raise ValueError("path length must be non-negative")
    if variant not in ("forward", "reversed"):
        raise ValueError(f"unknown variant {variant!r}")
    H = digon_collapse(D)
    G = H if variant == "forward" else reverse(H)
    X, Y, Z, paths = _forward_levels(G, ell)
    ym, yp = _witnesses(G, X, Y)
    if variant == "forward":
        return Partition3(X, Y, Z, DIRECTED, ell, H, ym, yp, paths)
    rpaths = {s: p[::-1] for s, p in paths.items()}
    return Partition3(X, Y, Z, DIRECTED_REVERSED, ell, H, yp, ym, rpaths)


def _chi_at_most(D: Digraph, S, t: int) -> bool:
    """χ(D[S]) <= t for acyclic D[S], using the longest path before the exact solver."""
    if not S:
        return True
    sub, _ = induced(D, S)
    if len(longest_path(sub)) <= t:
        return True
    return chromatic_number_of(D, S) <= t


def oriented_partition(D: Digraph, Q: RootedOrientedPath) -> Partition3:
    """Partition where every ``y`` in ``Y`` roots a copy of ``Q`` inside ``D[Y + Z]``.

    ``χ(D[Z]) <= ℓ(ℓ+1)/2`` for ``ℓ = |Q|``. Built by growing ``Q`` one step at
    a time from its far end towards its root. Only the arc directions of
    ``Q`` matter, not its labels.
    """
    part = _oriented_partition(D, Q.forward)
    return Partition3(part.X, part.Y, part.Z, ORIENTED, Q, D, part.in_witness, part.out_witness, part.paths)


@lru_cache(maxsize=512)
def _oriented_partition(D: Digraph, fwd: tuple) -> Partition3:
    ell = len(fwd)
    Y = maximal_acyclic_extension(D)
    Z: frozenset = frozenset()
    X = frozenset(range(D.n)) - Y
    ym, yp = _witnesses(D, X, Y)
    copies = {y: (y,) for y in Y}
    for j in range(ell - 1, -1, -1):
        size = ell - j  # length of the suffix being built
        if _chi_at_most(D, Y, size):
            Kp = Y
            fresh = {}
        else:
            sub, index = induced(D, Y)
            piece = RootedOrientedPath.from_directions(fwd[j:])
            part = embed_tree_in_dag(sub, piece.as_tree(), 0, check=False)
            Kp = frozenset(index[v] for v in part.K)
            fresh = {
                index[x]: tuple(index[img[i]] for i in range(size + 1)) for x, img in part.embeddings.items()
            }
        Z = Z | Kp
        Y_new = maximal_acyclic_extension(D, Y - Kp, Z)
        new_copies = dict(fresh)
        for x in Y_new & X:
            y = yp[x] if fwd[j] else ym[x]
            new_copies[x] = (x,) + copies[y]
        Y = Y_new
        X = X - Y
        copies = new_copies
        ym, yp = _witnesses(D, X, Y)
    Q = RootedOrientedPath.from_directions(fwd)
    return Partition3(X, Y, Z, ORIENTED, Q, D, ym, yp, copies)
