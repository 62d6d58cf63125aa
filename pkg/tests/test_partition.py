import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs
from orientree.digraph import Digraph, chromatic_number_of
from orientree.embed.partition import (
    DIRECTED,
    DIRECTED_REVERSED,
    ORIENTED,
    directed_partition,
    oriented_partition,
)
from orientree.harness.generators import regular_tournament
from orientree.trees import RootedOrientedPath


@given(digraphs(max_n=12), st.integers(0, 4), st.sampled_from(["forward", "reversed"]))
def test_directed_partition_invariants(D, ell, variant):
    part = directed_partition(D, ell, variant)
    assert part.violations(D) == []
    assert part.tag == (DIRECTED if variant == "forward" else DIRECTED_REVERSED)
    if part.Z:
        assert chromatic_number_of(part.host, part.Z) <= ell


@given(digraphs(max_n=12), st.lists(st.booleans(), min_size=1, max_size=3))
def test_oriented_partition_invariants(D, fwd):
    Q = RootedOrientedPath.from_directions(fwd)
    part = oriented_partition(D, Q)
    assert part.violations(D) == []
    assert part.tag == ORIENTED and part.param == Q
    if part.Z:
        assert chromatic_number_of(D, part.Z) <= len(fwd) * (len(fwd) + 1) // 2


def test_edge_cases():
    for n in (0, 1):
        D = Digraph(n)
        assert directed_partition(D, 2).violations(D) == []
        assert oriented_partition(D, RootedOrientedPath.from_directions([True])).violations(D) == []


def test_digon_heavy_host():
    n = 8
    D = Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if u != v))
    for ell in range(4):
        part = directed_partition(D, ell)
        assert part.violations(D) == []
        assert part.host.is_oriented()


def test_cycle_host_witnesses():
    D = regular_tournament(3)
    part = directed_partition(D, 0)
    assert len(part.Y) == 2 and len(part.X) == 1
    (x,) = part.X
    assert D.has_arc(part.in_witness[x], x) and D.has_arc(x, part.out_witness[x])


def test_violation_detection():
    D = regular_tournament(5)
    part = directed_partition(D, 1)
    broken = type(part)(part.X, part.Y | part.X, part.Z, part.tag, part.param, part.host,
                        part.in_witness, part.out_witness, part.paths)
    assert broken.violations(D)


def test_json_shape():
    part = oriented_partition(regular_tournament(7), RootedOrientedPath.from_directions([True, False]))
    doc = part.to_json()
    assert set(doc) >= {"X", "Y", "Z", "in_witness", "out_witness", "paths", "tag"}


@pytest.mark.parametrize("fwd", list(itertools.product([True, False], repeat=3)))
def test_all_length_three_paths_on_tournament(fwd):
    D = regular_tournament(11)
    part = oriented_partition(D, RootedOrientedPath.from_directions(fwd))
    assert part.violations(D) == []


def test_bad_arguments():
    with pytest.raises(ValueError):
        directed_partition(Digraph(2), -1)
    with pytest.raises(ValueError):
        directed_partition(Digraph(2), 1, "sideways")
