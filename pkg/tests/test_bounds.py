from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from orientree.bounds import (
    BOUND_NAMES,
    BoundSpec,
    Interval,
    arbo_margin,
    chunk_count_cap,
    evaluate_bound,
    f_interval,
    g_interval,
    main_margin,
    recurrence_chain,
    verify_chain_bblock,
    verify_inequality_arbo,
    verify_inequality_main,
    verify_recurrence_sweep,
)

mpmath.mp.dps = 50


def f_mp(k):
    k = mpmath.mpf(k)
    return 8 * mpmath.sqrt(mpmath.mpf(2) / 15) * k * mpmath.sqrt(k) + 11 * k / 3 + mpmath.sqrt(mpmath.mpf(5) / 6) * mpmath.sqrt(k) + 1


def g_mp(k):
    k = mpmath.mpf(k)
    return mpmath.sqrt(mpmath.mpf(4) / 3) * k * mpmath.sqrt(k) + k / 2


def test_anchor_values():
    assert evaluate_bound(BoundSpec("bblock", k=10, b=2)) == 10
    assert evaluate_bound(BoundSpec("bblock", k=10, b=3)) == 17
    assert evaluate_bound(BoundSpec("arbo", k=3)) == pytest.approx(7.5, abs=1e-12)
    assert evaluate_bound(BoundSpec("burr", k=5)) == 8
    assert evaluate_bound(BoundSpec("burr_quadratic", k=5)) == 16
    assert evaluate_bound(BoundSpec("addario_general", k=5)) == 11
    assert evaluate_bound(BoundSpec("glue_directed", c_prime=4, k_prime=3, ell=2)) == 8
    assert evaluate_bound(BoundSpec("glue_oriented", c_prime=4, k_prime=3, ell=3)) == 12
    assert evaluate_bound(BoundSpec("glue_leaves_once", c=5, k=4)) == 9
    assert evaluate_bound(BoundSpec("glue_leaves_twice", c=5, k=4)) == 12


@pytest.mark.parametrize("k", [1, 2, 3, 10, 1000])
def test_main_matches_mpmath(k):
    assert evaluate_bound(BoundSpec("main", k=k)) == pytest.approx(float(f_mp(k)), rel=1e-14)
    assert evaluate_bound(BoundSpec("arbo", k=k)) == pytest.approx(float(g_mp(k)), rel=1e-14)


def test_bblock_anchor_rows():
    for k in range(4, 40):
        assert evaluate_bound(BoundSpec("bblock", k=k, b=2)) == k
        assert evaluate_bound(BoundSpec("bblock", k=k, b=3)) == 2 * k - 3


def test_rational_fast_path():
    assert isinstance(evaluate_bound(BoundSpec("addario_general", k=4)), Fraction)


@pytest.mark.parametrize(
    "spec",
    [BoundSpec("bblock", k=5, b=1), BoundSpec("burr", k=0), BoundSpec("bblock", k=5), BoundSpec("nope", k=3),
     BoundSpec("glue_directed", c_prime=1)],
)
def test_invalid(spec):
    with pytest.raises(ValueError):
        evaluate_bound(spec)


def test_ordering_and_monotone():
    ks = range(1, 2000)
    for name in ("burr", "burr_quadratic", "addario_general", "arbo", "main"):
        vals = [float(evaluate_bound(BoundSpec(name, k=k))) for k in ks]
        assert all(a <= b for a, b in zip(vals, vals[1:])), name
    for k in ks:
        f, g = evaluate_bound(BoundSpec("main", k=k)), evaluate_bound(BoundSpec("arbo", k=k))
        assert f >= g >= 2 * k - 2
    assert evaluate_bound(BoundSpec("main", k=1)) >= 1 and evaluate_bound(BoundSpec("main", k=2)) >= 2


@given(st.integers(3, 10**7))
def test_intervals_enclose_mpmath(k):
    K = Interval.exact(np.array([float(k)]))
    for iv, ref in ((f_interval(K), f_mp(k)), (g_interval(K), g_mp(k))):
        assert mpmath.mpf(float(iv.lo[0])) <= ref <= mpmath.mpf(float(iv.hi[0]))
    m = arbo_margin(K)
    ref = g_mp(k) - g_mp(k - mpmath.sqrt(mpmath.mpf(4) * k / 3)) - (2 * k - 4)
    assert mpmath.mpf(float(m.lo[0])) <= ref <= mpmath.mpf(float(m.hi[0]))
    m = main_margin(K, 8)
    ref = f_mp(k) - f_mp(k - mpmath.sqrt(mpmath.mpf(5) * k / 6)) - (4 * k - 8)
    assert mpmath.mpf(float(m.lo[0])) <= ref <= mpmath.mpf(float(m.hi[0]))


def test_sweeps_small():
    for rep in (verify_inequality_arbo(10**4), verify_inequality_main(10**4), verify_inequality_main(10**4, extra=9)):
        assert rep.passed, rep.summary()
        assert rep.min_margin > 0
    assert verify_inequality_arbo(3).passed


def test_margin_at_three_matches_mpmath():
    rep = verify_inequality_arbo(3)
    ref = g_mp(3) - g_mp(3 - mpmath.sqrt(4)) - 2
    assert rep.min_margin == pytest.approx(float(ref), rel=1e-12)


def test_sweep_precondition():
    with pytest.raises(ValueError):
        verify_inequality_arbo(2)


def _iterate(ell, m, c1):
    c = Fraction(c1)
    for i in range(1, m):
        c += (i * ell + 1) + Fraction(ell * (ell + 1), 2) - 1
    return c


def test_recurrence_example():
    res = recurrence_chain(2, 3, 4)
    assert res.c_m == _iterate(2, 3, 4) == 16
    assert res.cap == 16 and res.passed
    assert recurrence_chain(3, 1, 7).c_m == 7


@given(st.integers(1, 40), st.integers(1, 40))
def test_recurrence_caps(ell, m):
    res = recurrence_chain(ell, m, Fraction(ell * (ell + 1), 2) + 1)
    assert res.c_m == _iterate(ell, m, Fraction(ell * (ell + 1), 2) + 1)
    assert res.passed


def test_recurrence_sweep_small():
    assert verify_recurrence_sweep(500).passed


@pytest.mark.parametrize("k", range(1, 500))
def test_chunk_count_cap(k):
    m = chunk_count_cap(k)
    assert 3 * m * m <= 10 * k < 3 * (m + 1) ** 2


def test_bblock_chain():
    rep = verify_chain_bblock(5, 60)
    assert rep.passed and rep.min_margin >= 0
    with pytest.raises(ValueError):
        verify_chain_bblock(2, 10)


def test_bound_names_complete():
    assert len(BOUND_NAMES) == 10
