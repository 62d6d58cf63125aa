import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import dags, digraphs, trees
from oracles import chi_bruteforce, longest_directed_path_order
from orientree.digraph import Digraph, NotADAGError, chromatic_number, chromatic_number_of
from orientree.embed.base import embedding_violations
from orientree.embed.bruteforce import brute_force_embed
from orientree.embed.dag import (
    acyclic_arc_skeleton,
    embed_tree_in_dag,
    gallai_roy_path,
    leaf_removal_order,
    longest_path,
    longest_path_colouring,
)
from orientree.harness.generators import transitive_tournament
from orientree.trees import directed_path, out_star


@given(dags(max_n=9), trees(max_k=5), st.data())
def test_bikernel_partition(D, T, data):
    r = data.draw(st.sampled_from(T.vertices))
    part = embed_tree_in_dag(D, T, r, check=False)
    assert part.X | part.K == set(range(D.n)) and not part.X & part.K
    assert len(part.kernels) == T.k - 1
    for K0 in part.kernels:
        assert not any(D.has_arc(u, v) for u in K0 for v in K0)
    if part.K:
        assert chromatic_number_of(D, part.K) <= T.k - 1
    for x, m in part.embeddings.items():
        assert m[r] == x and not embedding_violations(D, T, m)
        assert set(m.values()) - {x} <= part.K
    if D.n and chromatic_number(D) >= T.k:
        assert part.X


def test_transitive_tournament_holds_every_tree():
    D = transitive_tournament(5)
    from orientree.trees import enumerate_oriented_trees

    for T in enumerate_oriented_trees(5):
        part = embed_tree_in_dag(D, T)
        assert part.X


def test_requires_dag_and_chi():
    with pytest.raises(NotADAGError):
        embed_tree_in_dag(Digraph(2, frozenset({(0, 1), (1, 0)})), out_star(2))
    with pytest.raises(ValueError):
        embed_tree_in_dag(Digraph(3, frozenset({(0, 1)})), directed_path(3))


def test_leaf_removal_keeps_root():
    steps = leaf_removal_order(out_star(4), 0)
    assert [s[0] for s in steps] == [1, 2, 3]
    assert all(nb == 0 and toward for _, nb, toward in steps)


@given(digraphs(max_n=8, min_n=1))
def test_gallai_roy(D):
    chi = chi_bruteforce(D)
    m = gallai_roy_path(D, chi)
    assert m is not None
    assert not embedding_violations(D, directed_path(chi), m)
    col = longest_path_colouring(D)
    assert all(col[u] != col[v] for u, v in D.arcs)
    assert max(col) + 1 <= longest_directed_path_order(D)


@given(digraphs(max_n=8, min_n=1))
def test_skeleton_is_arc_maximal(D):
    S = acyclic_arc_skeleton(D)
    assert S.arcs <= D.arcs
    from oracles import has_cycle

    assert not has_cycle(S.n, S.arcs)
    for a in D.arcs - S.arcs:
        assert has_cycle(S.n, S.arcs | {a})


@given(dags(max_n=9))
def test_longest_path_dag(D):
    assert len(longest_path(D)) == longest_directed_path_order(D)


def test_gallai_roy_none_below():
    D = Digraph(3, frozenset({(0, 1)}))
    assert gallai_roy_path(D, 3) is None
    with pytest.raises(ValueError):
        gallai_roy_path(D, 0)


@given(dags(max_n=8), trees(max_k=4))
def test_oracle_agrees_with_bikernel(D, T):
    assume(D.n >= T.k)
    part = embed_tree_in_dag(D, T, check=False)
    if part.X:
        assert brute_force_embed(D, T) is not None
