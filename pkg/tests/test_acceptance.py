"""Acceptance criteria, one test (and one printed PASS/FAIL line) each.

Run standalone with ``python tests/test_acceptance.py`` for just the nine lines.
"""

import functools
import sys
import time

import pytest

from orientree.bounds import (
    BoundSpec,
    evaluate_bound,
    verify_chain_bblock,
    verify_inequality_arbo,
    verify_inequality_main,
    verify_recurrence_sweep,
)
from orientree.harness import experiments as ex

SEED = 7


def report_line(n: int, ok: bool, text: str) -> str:
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} - {text}"


def _say(capsys, line):
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        print("\n" + line)


@functools.lru_cache(maxsize=None)
def suite(name):
    t0 = time.perf_counter()
    rep = {
        "partitions": lambda: ex.verify_partitions(n_max=24, samples=200, ell_max=4, path_len_max=3, seed=SEED),
        "dag": lambda: ex.verify_dag_embeddings(k_max=5, samples=100, seed=SEED),
        "gallai-roy": lambda: ex.verify_gallai_roy(samples=100, n_max=15, seed=SEED),
        "gluing": lambda: ex.verify_gluing(samples=100, n_max=20, seed=SEED),
        "burr-small": lambda: ex.verify_burr_small(samples=500, seed=SEED),
        "bblock": lambda: ex.verify_bblock(b=3, k_max=7, samples=30, seed=SEED),
        "arborescences": lambda: ex.verify_arborescences(k_max=6, samples=3, seed=SEED),
        "main-small": lambda: ex.verify_main_small(k_max=5, samples=3, seed=SEED),
    }[name]()
    return rep, time.perf_counter() - t0


def crit1():
    rep, dt = suite("partitions")
    c = rep.counts
    ok = c["violations"] == 0 and c["records"] == 200 * (2 * 5 + 14) and dt <= 300
    return ok, f"partition invariants: {c['violations']} violations in {c['records']} partitions, {dt:.1f}s (limit 300s)"


def crit2():
    rep, _ = suite("dag")
    c = rep.counts
    ok = c["violations"] == 0 and c["failure"] == 0
    return ok, f"DAG embeddings k<=5: {c['failure']} failures in {c['records']} (tree, root, host) checks"


def crit3():
    rep, _ = suite("gallai-roy")
    c = rep.counts
    ok = c["success"] == 100 and c["violations"] == 0
    return ok, f"Gallai-Roy: directed path of order chi found on {c['success']}/100 digraphs"


def crit4():
    rep, _ = suite("gluing")
    cons = rep.rate("directed-conservative")
    ori = rep.rate("oriented")
    stated = rep.rate("directed-stated")
    ok = cons[0] == cons[1] > 0 and ori[0] == ori[1] > 0 and rep.passed
    return ok, (f"gluing at guaranteed thresholds: directed {cons[0]}/{cons[1]}, oriented {ori[0]}/{ori[1]}; "
                f"directed at the stated threshold {stated[0]}/{stated[1]} (reported only)")


def crit5():
    rep, _ = suite("burr-small")
    c = rep.counts
    ok = c["failure"] == 0 and c["conjecture_relevant"] == 0
    return ok, f"small-scale 2k-2: {c['success']}/{c['records']} embeddings, {c['conjecture_relevant']} conjecture-relevant misses"


def crit6():
    t0 = time.perf_counter()
    reps = [ex.tightness_check(k, samples=10, seed=SEED) for k in range(3, 7)]
    dt = time.perf_counter() - t0
    absent = all(r.records[0]["method"] == "absent" and r.records[0]["success"] for r in reps)
    ok = absent and all(r.passed for r in reps) and dt <= 60
    return ok, f"out-star absent from the regular tournament of order 2k-3 for k=3..6: {absent}, {dt:.1f}s (limit 60s)"


def crit7():
    reps = [
        verify_inequality_arbo(10**6),
        verify_inequality_main(10**6, extra=8),
        verify_inequality_main(10**6, extra=9),
        verify_chain_bblock(10, 1000),
        verify_recurrence_sweep(10**4),
    ]
    strict = all(r.min_margin > 0 for r in reps[:3])
    ok = all(r.passed for r in reps) and strict
    mins = ", ".join(f"{r.name.split(':')[0]} {r.min_margin:.3g}" for r in reps)
    return ok, f"inequality sweeps all pass: {ok}; min margins {mins}"


def crit8():
    anchors = all(
        evaluate_bound(BoundSpec("bblock", k=k, b=2)) == k and evaluate_bound(BoundSpec("bblock", k=k, b=3)) == 2 * k - 3
        for k in range(4, 200)
    )
    rep, _ = suite("bblock")
    ok_n, tot = rep.rate("bblock")
    ok = anchors and ok_n == tot > 0
    return ok, (f"b-block anchors b=2 -> k, b=3 -> 2k-3: {anchors}; constructive success at chi >= 2k-3, "
                f"k<=7: {ok_n}/{tot} ({rep.counts['violations']} misses above the pipeline's own guarantee)")


def crit9():
    names = ["dag", "gluing", "bblock", "arborescences", "main-small"]
    checked = bad = skipped = 0
    for nm in names:
        rep, _ = suite(nm)
        for r in rep.records:
            if r["method"] == "oracle":
                checked += 1
                bad += not r["success"]
        skipped += sum(v for k, v in rep.skipped.items() if "oracle" in k)
    ok = bad == 0 and checked > 0
    return ok, f"oracle dominance: {bad} disagreements over {checked} checked constructive successes ({skipped} above cap)"


CRITERIA = [crit1, crit2, crit3, crit4, crit5, crit6, crit7, crit8, crit9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n, capsys):
    ok, text = CRITERIA[n - 1]()
    _say(capsys, report_line(n, ok, text))
    assert ok, text


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        ok, text = fn()
        results.append(ok)
        print(report_line(i, ok, text), flush=True)
    sys.exit(0 if all(results) else 1)
