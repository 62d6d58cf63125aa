"""Plain-text formats for digraphs, trees and rooted paths.

::

    # comment
    n 4
    a 0 1
    a 1 2
    r 0          (trees only: root)
    root 3       (rooted paths only: the end used as root)
"""

from __future__ import annotations

from .digraph import Digraph
from .trees import OrientedTree, RootedOrientedPath


class FormatError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _records(text: str):
    for no, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _ints(no, fields, count):
    if len(fields) != count:
        raise FormatError(no, f"expected {count} integer(s), got {len(fields)}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(no, f"not an integer in {' '.join(fields)!r}") from None


def _parse(text: str, extras: tuple[str, ...]):
    n = None
    arcs = []
    seen = set()
    extra = {}
    for no, (key, *rest) in _records(text):
        if n is None:
            if key != "n":
                raise FormatError(no, "first record must be 'n <count>'")
            (n,) = _ints(no, rest, 1)
            if n < 0:
                raise FormatError(no, "vertex count must be non-negative")
            continue
        if key == "a":
            u, v = _ints(no, rest, 2)
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(no, f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise FormatError(no, f"self-loop at {u}")
            if (u, v) in seen:
                raise FormatError(no, f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            arcs.append((u, v))
        elif key in extras:
            if key in extra:
                raise FormatError(no, f"repeated '{key}' record")
            (extra[key],) = _ints(no, rest, 1)
            extra[key + "_line"] = no
        elif key == "n":
            raise FormatError(no, "repeated 'n' record")
        else:
            raise FormatError(no, f"unknown record type {key!r}")
    if n is None:
        raise FormatError(1, "missing 'n <count>' record")
    return n, arcs, extra


def parse_digraph(text: str) -> Digraph:
    n, arcs, _ = _parse(text, ())
    return Digraph(n, frozenset(arcs))


def dump_digraph(D: Digraph) -> str:
    lines = [f"n {D.n}"] + [f"a {u} {v}" for u, v in sorted(D.arcs)]
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> OrientedTree:
    n, arcs, extra = _parse(text, ("r",))
    root = extra.get("r")
    try:
        return OrientedTree.from_arcs(n, arcs, root)
    except ValueError as exc:
        raise FormatError(extra.get("r_line", 1), str(exc)) from None


def dump_tree(T: OrientedTree) -> str:
    T, _ = T.relabelled()
    lines = [f"n {T.k}"] + [f"a {u} {v}" for u, v in sorted(T.arcs)]
    if T.root is not None:
        lines.append(f"r {T.root}")
    return "\n".join(lines) + "\n"


def parse_rooted_path(text: str) -> RootedOrientedPath:
    n, arcs, extra = _parse(text, ("root",))
    if "root" not in extra:
        raise FormatError(1, "rooted path needs a 'root <end>' record")
    try:
        T = OrientedTree.from_arcs(n, arcs)
        return RootedOrientedPath.from_tree(T, extra["root"])
    except ValueError as exc:
        raise FormatError(extra["root_line"], str(exc)) from None


def dump_rooted_path(Q: RootedOrientedPath) -> str:
    pos = {v: i for i, v in enumerate(Q.vertices)}
    lines = [f"n {len(Q.vertices)}"] + [f"a {pos[u]} {pos[v]}" for u, v in sorted(Q.arcs, key=lambda a: (pos[a[0]], pos[a[1]]))]
    lines.append("root 0")
    return "\n".join(lines) + "\n"
