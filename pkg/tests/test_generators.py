import pytest

from orientree.digraph import chromatic_number, is_acyclic
from orientree.harness.generators import (
    KINDS,
    InstanceFamily,
    circulant_tournament,
    generate,
    regular_tournament,
)


@pytest.mark.parametrize("kind", KINDS)
def test_deterministic(kind):
    extra = {"offsets": (1, 2, 3)} if kind == "circulant_tournament" else {}
    fam = InstanceFamily(kind, 7, 0.3, seed=11, **extra)
    assert generate(fam) == generate(fam)


def test_seed_changes_output():
    a = generate(InstanceFamily("random_gnp_digraph", 20, 0.3, seed=1))
    b = generate(InstanceFamily("random_gnp_digraph", 20, 0.3, seed=2))
    assert a != b


def test_regular_tournament_three_is_cycle():
    assert regular_tournament(3).arcs == {(0, 1), (1, 2), (2, 0)}


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
def test_regular_outdegree(n):
    D = regular_tournament(n)
    assert all(D.out_degree(v) == (n - 1) // 2 for v in range(n))
    assert len(D.arcs) == n * (n - 1) // 2 and D.is_oriented()


def test_transitive():
    D = generate(InstanceFamily("transitive_tournament", 4))
    assert is_acyclic(D) and chromatic_number(D) == 4


@pytest.mark.parametrize("kind", ["random_dag", "layered_dag"])
def test_dags(kind):
    for s in range(10):
        assert is_acyclic(generate(InstanceFamily(kind, 12, 0.5, seed=s)))


def test_tournaments_are_tournaments():
    D = generate(InstanceFamily("random_tournament", 9, seed=3))
    assert len(D.arcs) == 36 and D.is_oriented()


def test_bad_parameters():
    with pytest.raises(ValueError):
        regular_tournament(4)
    with pytest.raises(ValueError):
        circulant_tournament(5, (1, 4))
    with pytest.raises(ValueError):
        generate(InstanceFamily("nope", 3))
    with pytest.raises(ValueError):
        generate(InstanceFamily("random_gnp_digraph", 3, p=1.5))
    with pytest.raises(ValueError):
        generate(InstanceFamily("circulant_tournament", 5))
