import json

from orientree.bounds import BoundSpec
from orientree.digraph import Digraph
from orientree.harness import experiments as ex
from orientree.harness.generators import InstanceFamily
from orientree.trees import out_star


def test_report_revalidates_witness():
    rep = ex.ExperimentReport("t")
    D = Digraph(3, frozenset({(0, 1), (0, 2)}))
    good = rep.add_embedding(D, out_star(3), {0: 0, 1: 1, 2: 2}, {}, method="m", expected=True)
    assert good["success"] and good["witness"]
    bad = rep.add_embedding(D, out_star(3), {0: 1, 1: 0, 2: 2}, {}, method="m", expected=False)
    assert bad["violation"] and not bad["success"]
    miss = rep.add_embedding(D, out_star(3), None, {}, method="m", expected=False)
    assert not miss["violation"]
    assert not rep.passed


def test_timing_is_optional():
    rep = ex.verify_gallai_roy(samples=5, n_max=8, seed=3)
    plain = json.loads(rep.to_json())
    timed = json.loads(rep.to_json(timing=True))
    assert "time" not in plain["records"][0] and "time" in timed["records"][0]
    assert ex.verify_gallai_roy(samples=5, n_max=8, seed=3).to_json() == rep.to_json()


def test_small_suites_pass():
    for rep in (
        ex.verify_partitions(n_max=10, samples=10, seed=1),
        ex.verify_dag_embeddings(k_max=3, samples=5, n_max=9, seed=1),
        ex.verify_gluing(samples=10, n_max=12, seed=1),
        ex.verify_bblock(k_max=5, samples=3, seed=1),
        ex.verify_arborescences(k_max=4, samples=1),
    ):
        assert rep.passed, rep.summary()
        assert rep.counts["success"] > 0


def test_universality_methods():
    fams = [InstanceFamily("random_tournament", 6, seed=s) for s in range(3)]
    for method in ex.METHODS:
        rep = ex.verify_universality(3, BoundSpec("burr", k=3), fams, method)
        assert rep.passed
    below = ex.verify_universality(3, BoundSpec("burr", k=3), [InstanceFamily("transitive_tournament", 3)], "bruteforce")
    assert below.skipped == {"host below bound": 1}


def test_tightness_k3():
    rep = ex.tightness_check(3, samples=3)
    assert rep.passed and rep.records[0]["method"] == "absent"


def test_all_tournaments_count():
    assert sum(1 for _ in ex.all_tournaments(4)) == 64


def test_bblock_paths_block_count():
    paths = list(ex.bblock_paths(6, 3))
    assert paths and all(len(ex.blocks(P)) == 3 for P in paths)
