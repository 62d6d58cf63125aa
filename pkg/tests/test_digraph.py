import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dags, digraphs
from oracles import chi_bruteforce, has_cycle
from orientree.digraph import (
    Digraph,
    InstanceTooLargeError,
    acyclic_witness,
    chromatic_number,
    chromatic_number_of,
    cycle_through,
    digon_collapse,
    in_kernel,
    induced,
    is_acyclic,
    is_in_kernel,
    is_out_kernel,
    maximal_acyclic_extension,
    optimal_colouring,
    out_kernel,
    reverse,
    sinks,
    sources,
    to_mask,
    topological_order,
)


def cycle(n):
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def test_basic_masks():
    D = Digraph(3, frozenset({(0, 1), (1, 2), (2, 1)}))
    assert D.out_neighbours(1) == [2]
    assert D.in_neighbours(1) == [0, 2]
    assert D.digons() == [(1, 2)]
    assert not D.is_oriented()
    assert D.has_arc(2, 1) and not D.has_arc(1, 0)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Digraph(2, frozenset({(0, 1), (1, 0)}), oriented=True)


@pytest.mark.parametrize("n, chi", [(1, 1), (2, 2), (3, 3), (4, 2), (5, 3), (6, 2), (7, 3)])
def test_cycles(n, chi):
    D = cycle(n) if n > 1 else Digraph(1)
    assert chromatic_number(D) == chi


def test_digon_counts_as_edge():
    assert chromatic_number(Digraph(2, frozenset({(0, 1), (1, 0)}))) == 2


def test_empty_digraph_chi_undefined():
    with pytest.raises(ValueError):
        optimal_colouring(Digraph(0))
    assert chromatic_number_of(Digraph(3), []) == 0


def test_cap():
    with pytest.raises(InstanceTooLargeError):
        chromatic_number(Digraph(70), cap=64)


@given(digraphs(max_n=7, min_n=1))
def test_chi_matches_bruteforce(D):
    col = optimal_colouring(D)
    assert col.is_proper(D)
    assert col.num_colours == chi_bruteforce(D)


@given(digraphs(max_n=9))
def test_acyclic_matches_dfs(D):
    ok, wit = acyclic_witness(D)
    assert ok == (not has_cycle(D.n, D.arcs))
    if ok:
        pos = {v: i for i, v in enumerate(wit)}
        assert all(pos[u] < pos[v] for u, v in D.arcs)
    else:
        assert wit[0] == min(wit)
        assert all(D.has_arc(a, b) for a, b in zip(wit, wit[1:] + wit[:1]))


@given(digraphs(max_n=9))
def test_maximal_acyclic_extension(D):
    Y = maximal_acyclic_extension(D)
    assert not has_cycle(D.n, D.arcs, Y)
    for x in set(range(D.n)) - Y:
        cyc = cycle_through(D, to_mask(Y), x)
        assert cyc is not None and cyc[0] == x
        assert set(cyc[1:]) <= Y
        assert all(D.has_arc(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


@given(digraphs(max_n=8))
def test_digon_collapse_keeps_chi(D):
    H = digon_collapse(D)
    assert H.is_oriented()
    assert H.arcs <= D.arcs
    if D.n:
        assert chromatic_number(H) == chromatic_number(D)


@given(dags(max_n=10))
def test_kernels(D):
    K = out_kernel(D)
    assert is_out_kernel(D, K)
    J = in_kernel(D)
    assert is_in_kernel(D, J)
    # independent definitions
    for v in set(range(D.n)) - K:
        assert any(D.has_arc(v, w) for w in K)
    for v in set(range(D.n)) - J:
        assert any(D.has_arc(w, v) for w in J)
    assert not any(D.has_arc(u, v) for u in K for v in K)


@given(dags(max_n=10), st.data())
def test_kernel_within(D, data):
    S = data.draw(st.sets(st.integers(0, D.n - 1)))
    K = out_kernel(D, S)
    assert K <= S
    sub, index = induced(D, S)
    back = {h: i for i, h in enumerate(index)}
    assert is_out_kernel(sub, {back[v] for v in K})


@given(dags(max_n=10))
def test_sinks_sources_topo(D):
    order = topological_order(D)
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[u] < pos[v] for u, v in D.arcs)
    assert sinks(D) == [v for v in range(D.n) if D.out_degree(v) == 0]
    assert sources(D) == [v for v in range(D.n) if D.in_degree(v) == 0]
    assert sinks(reverse(D)) == sources(D)


def test_not_acyclic_cycle():
    assert not is_acyclic(cycle(4))
    assert is_acyclic(cycle(4), [0, 1, 2])
