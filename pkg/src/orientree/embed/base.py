"""Embedding checks and the composable :class:`Embedder` wrapper."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from ..digraph import Digraph
from ..trees import OrientedTree

log = logging.getLogger("orientree.embed")


class BoundViolation(RuntimeError):
    """A construction failed on a host that meets its guaranteed threshold."""


class ConjectureRelevantFailure(RuntimeError):
    """Exhaustive search found no copy where a cited theorem promises one."""


def embedding_violations(D: Digraph, T: OrientedTree, mapping: Mapping[int, int]) -> list[str]:
    errs = []
    if set(mapping) != set(T.vertices):
        errs.append("mapping domain differs from the tree's vertex set")
        return errs
    images = list(mapping.values())
    if len(set(images)) != len(images):
        errs.append("mapping is not injective")
    if any(not 0 <= h < D.n for h in images):
        errs.append("image outside the host")
        return errs
    for a, b in sorted(T.arcs):
        if not D.has_arc(mapping[a], mapping[b]):
            errs.append(f"tree arc ({a}, {b}) maps to non-arc ({mapping[a]}, {mapping[b]})")
    return errs


def is_embedding(D: Digraph, T: OrientedTree, mapping: Mapping[int, int] | None) -> bool:
    return mapping is not None and not embedding_violations(D, T, mapping)


def lift(mapping: Mapping[int, int], index) -> dict:
    """Translate an embedding into an induced subdigraph back to the parent's labels."""
    return {t: index[h] for t, h in mapping.items()}


def embedding_to_json(D: Digraph, T: OrientedTree, mapping: Mapping[int, int]) -> str:
    doc = {str(t): int(h) for t, h in sorted(mapping.items())}
    doc["valid"] = is_embedding(D, T, mapping)
    return json.dumps(doc, sort_keys=False)


@dataclass(frozen=True)
class Embedder:
    """An embedding routine for one fixed tree plus the chromatic threshold it promises.

    ``run(D)`` returns ``{tree vertex: host vertex}`` or None. Whenever
    ``χ(D) >= threshold`` the routine is expected to succeed.
    """

    tree: OrientedTree
    threshold: Fraction
    run: Callable[[Digraph], dict | None] = field(compare=False)
    name: str = "embedder"
    trace: tuple = field(default=(), compare=False)

    def __call__(self, D: Digraph) -> dict | None:
        if D.n < self.tree.k:
            return None
        return self.run(D)
