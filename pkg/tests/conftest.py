import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from orientree.digraph import Digraph  # noqa: E402
from orientree.trees import OrientedTree  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def digraphs(draw, max_n=8, min_n=0, oriented=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if oriented:
        chosen = [(u, v) for u, v in chosen if (v, u) not in chosen or u < v]
    return Digraph(n, frozenset(chosen))


@st.composite
def dags(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Digraph(n, frozenset((perm[u], perm[v]) for u, v in chosen))


@st.composite
def trees(draw, max_k=7, min_k=1):
    k = draw(st.integers(min_k, max_k))
    arcs = []
    for v in range(1, k):
        p = draw(st.integers(0, v - 1))
        arcs.append((p, v) if draw(st.booleans()) else (v, p))
    return OrientedTree.from_arcs(k, arcs)


@st.composite
def few_leaf_trees(draw, max_paths=3, max_len=15):
    """Trees built from a handful of long oriented paths hung off earlier vertices."""
    arcs = []
    n = 1
    for _ in range(draw(st.integers(1, max_paths))):
        at = draw(st.integers(0, n - 1))
        for _ in range(draw(st.integers(1, max_len))):
            arcs.append((at, n) if draw(st.booleans()) else (n, at))
            at = n
            n += 1
    return OrientedTree.from_arcs(n, arcs)
