"""Universality bounds, gluing costs, and rigorous numeric checks of the inequalities between them.

Sweeps over ``k`` use a small vectorised interval type: every float
operation rounds its result one ulp outward, so ``lo <= true value <= hi``
holds for each entry (IEEE +, -, *, / and sqrt are correctly rounded). An
inequality passes only when the lower end of the margin interval is positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

BOUND_NAMES = (
    "burr",
    "burr_quadratic",
    "addario_general",
    "bblock",
    "arbo",
    "main",
    "glue_directed",
    "glue_oriented",
    "glue_leaves_once",
    "glue_leaves_twice",
)


@dataclass(frozen=True)
class BoundSpec:
    name: str
    k: int | None = None
    b: int | None = None
    c_prime: int | None = None
    k_prime: int | None = None
    ell: int | None = None
    c: int | None = None


def arborescence_bound(k: float) -> float:
    """sqrt(4/3) k sqrt(k) + k/2."""
    return 2 * k * math.sqrt(k / 3) + k / 2


def main_bound(k: float) -> float:
    """8 sqrt(2/15) k sqrt(k) + 11k/3 + sqrt(5/6) sqrt(k) + 1."""
    return 8 * k * math.sqrt(2 * k / 15) + 11 * k / 3 + math.sqrt(5 * k / 6) + 1


def bblock_bound(b: int, k: int) -> int:
    if b < 2:
        raise ValueError("b-block bound needs b >= 2")
    return (b - 1) * (k - 3) + 3


def _need(spec: BoundSpec, *names):
    vals = []
    for nm in names:
        v = getattr(spec, nm)
        if v is None:
            raise ValueError(f"bound {spec.name!r} needs parameter {nm}")
        vals.append(v)
    return vals


def evaluate_bound(spec: BoundSpec):
    """Value of the named bound: a ``Fraction`` for polynomial formulas, a float otherwise."""
    name = spec.name
    if name not in BOUND_NAMES:
        raise ValueError(f"unknown bound {name!r}")
    if name.startswith("glue_"):
        if name == "glue_directed":
            c, kp, ell = _need(spec, "c_prime", "k_prime", "ell")
            return Fraction(c + kp + 2 * ell - 3)
        if name == "glue_oriented":
            c, kp, ell = _need(spec, "c_prime", "k_prime", "ell")
            return Fraction(c + kp + ell * (ell + 1) // 2 - 1)
        c, k = _need(spec, "c", "k")
        return Fraction(c + 2 * k - 4) if name == "glue_leaves_once" else Fraction(c + 4 * k - 9)
    (k,) = _need(spec, "k")
    if k < 1:
        raise ValueError("k must be at least 1")
    if name == "burr":
        return Fraction(2 * k - 2)
    if name == "burr_quadratic":
        return Fraction((k - 1) ** 2)
    if name == "addario_general":
        return Fraction(k * k, 2) - Fraction(k, 2) + 1
    if name == "bblock":
        (b,) = _need(spec, "b")
        return Fraction(bblock_bound(b, k))
    if name == "arbo":
        return arborescence_bound(k)
    return main_bound(k)


# ---------------------------------------------------------------------------
# outward-rounded interval arithmetic over numpy arrays


def _dn(x):
    return np.nextafter(x, -np.inf)


def _up(x):
    return np.nextafter(x, np.inf)


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        self.lo = np.asarray(lo, dtype=np.float64)
        self.hi = self.lo if hi is None else np.asarray(hi, dtype=np.float64)

    @classmethod
    def exact(cls, x) -> "Interval":
        """Wrap values that are exactly representable (small integers)."""
        return cls(x, x)

    def __add__(self, o):
        o = _iv(o)
        return Interval(_dn(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, o):
        o = _iv(o)
        return Interval(_dn(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, o):
        return _iv(o) - self

    def __mul__(self, o):
        o = _iv(o)
        p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return Interval(_dn(np.minimum.reduce(p)), _up(np.maximum.reduce(p)))

    __rmul__ = __mul__

    def __truediv__(self, d):
        d = _iv(d)
        if np.any(d.lo <= 0):
            raise ValueError("interval division only by positive intervals")
        p = [self.lo / d.lo, self.lo / d.hi, self.hi / d.lo, self.hi / d.hi]
        return Interval(_dn(np.minimum.reduce(p)), _up(np.maximum.reduce(p)))

    def sqrt(self) -> "Interval":
        if np.any(self.lo < 0):
            raise ValueError("square root of a possibly negative interval")
        return Interval(_dn(np.sqrt(self.lo)), _up(np.sqrt(self.hi)))


def _iv(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.exact(x)


def g_interval(k: Interval) -> Interval:
    return 2 * k * (k / 3).sqrt() + k / 2


def f_interval(k: Interval) -> Interval:
    return 8 * k * (2 * k / 15).sqrt() + 11 * k / 3 + (5 * k / 6).sqrt() + 1


@dataclass
class InequalityReport:
    name: str
    k_min: int
    k_max: int
    failures: list = field(default_factory=list)
    min_margin: float = math.inf
    argmin: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} k values)"
        return f"{self.name}: k in [{self.k_min}, {self.k_max}] {status}; min margin {self.min_margin:.6g} at k={self.argmin}"


def _sweep(name, k_min, k_max, margin_fn, chunk=1 << 20) -> InequalityReport:
    rep = InequalityReport(name, k_min, k_max)
    for start in range(k_min, k_max + 1, chunk):
        ks = np.arange(start, min(start + chunk, k_max + 1), dtype=np.float64)
        lo = margin_fn(Interval.exact(ks)).lo
        bad = ks[lo <= 0]
        rep.failures.extend(int(x) for x in bad[: 100 - len(rep.failures)] if len(rep.failures) < 100)
        i = int(np.argmin(lo))
        if lo[i] < rep.min_margin:
            rep.min_margin, rep.argmin = float(lo[i]), int(ks[i])
    return rep


def arbo_margin(k: Interval) -> Interval:
    """g(k) - g(k - sqrt(4k/3)) - (2k - 4)."""
    shrunk = k - (4 * k / 3).sqrt()
    return g_interval(k) - g_interval(shrunk) - (2 * k - 4)


def main_margin(k: Interval, extra: int = 8) -> Interval:
    """f(k) - f(k - sqrt(5k/6)) - (4k - extra)."""
    shrunk = k - (5 * k / 6).sqrt()
    return f_interval(k) - f_interval(shrunk) - (4 * k - extra)


def verify_inequality_arbo(k_max: int, k_min: int = 3) -> InequalityReport:
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    return _sweep("arbo: g(k) >= g(k - sqrt(4k/3)) + 2k - 4", k_min, k_max, arbo_margin)


def verify_inequality_main(k_max: int, k_min: int = 3, extra: int = 8) -> InequalityReport:
    """``extra=8`` checks ``f(k) >= f(k - sqrt(5k/6)) + 4k - 8``; ``extra=9`` the ``4k - 9`` variant."""
    if k_max < 3:
        raise ValueError("k_max must be at least 3")
    return _sweep(
        f"main: f(k) >= f(k - sqrt(5k/6)) + 4k - {extra}", k_min, k_max, lambda k: main_margin(k, extra)
    )


# ---------------------------------------------------------------------------
# gluing chains


@dataclass(frozen=True)
class RecurrenceResult:
    c_m: Fraction
    cap: Fraction
    closed_c_m: Fraction
    closed_cap: Fraction

    @property
    def passed(self) -> bool:
        return self.c_m <= self.cap and self.closed_c_m <= self.closed_cap


def _iterate_chain(ell: int, m: int, c1) -> Fraction:
    step = ell * (ell + 1) // 2
    total = 0
    for i in range(1, m):
        total += (i * ell + 1) + step - 1
    return Fraction(c1) + total


def recurrence_chain(ell: int, m: int, c1) -> RecurrenceResult:
    """Iterate ``c_{i+1} = c_i + (iℓ + 1) + ℓ(ℓ+1)/2 - 1`` and compare with its closed-form caps.

    The second pair restarts the chain from ``c_1 = ℓ(ℓ+1)/2 + 1`` and
    compares with ``(ℓm/2)(ℓ+m) + 1``.
    """
    if ell < 1 or m < 1:
        raise ValueError("need ell >= 1 and m >= 1")
    c_m = _iterate_chain(ell, m, c1)
    cap = Fraction(c1) + Fraction(ell * (m - 1) * (ell + m + 1), 2)
    base = Fraction(ell * (ell + 1), 2) + 1
    closed = _iterate_chain(ell, m, base)
    closed_cap = Fraction(ell * m * (ell + m), 2) + 1
    return RecurrenceResult(c_m, cap, closed, closed_cap)


def chunk_count_cap(k: int) -> int:
    """floor(2 sqrt(5k/6)) = floor(sqrt(10k/3)), exactly."""
    m = math.isqrt(10 * k // 3)
    while 3 * (m + 1) ** 2 <= 10 * k:
        m += 1
    while 3 * m * m > 10 * k:
        m -= 1
    return m


def verify_recurrence_sweep(k_max: int, k_min: int = 3) -> InequalityReport:
    """For each k: chain with ℓ = ceil(sqrt(6k/5)), m = floor(2 sqrt(5k/6)) ends below f(k)."""
    from .trees import chunk_length

    rep = InequalityReport("recurrence: c_m <= f(k)", k_min, k_max)
    ks = np.arange(k_min, k_max + 1)
    f_lo = f_interval(Interval.exact(ks.astype(np.float64))).lo
    for k, flo in zip(ks.tolist(), f_lo.tolist()):
        ell, m = chunk_length(k), chunk_count_cap(k)
        res = recurrence_chain(ell, max(m, 1), Fraction(ell * (ell + 1), 2) + 1)
        # exact rational vs. a float lower bound of f(k): compare in Fractions
        margin = Fraction(flo) - res.closed_c_m
        if not res.passed or margin <= 0:
            rep.failures.append(k)
        if float(margin) < rep.min_margin:
            rep.min_margin, rep.argmin = float(margin), k
    return rep


def verify_chain_bblock(b_max: int, k_max: int) -> InequalityReport:
    """Both displayed steps of the b-block induction for 3 <= b <= b_max, 1 <= ℓ <= k-3."""
    if b_max < 3:
        raise ValueError("the b-block chain needs b >= 3")
    rep = InequalityReport("bblock chain", 4, k_max)
    for b in range(3, b_max + 1):
        for k in range(4, k_max + 1):
            ell = np.arange(1, k - 2, dtype=np.int64)
            glued = (b - 2) * (k - ell - 3) + 3 + (k - ell) + 2 * ell - 3
            mid = (b - 1) * (k - ell - 3) + 2 * ell + 3
            top = (b - 1) * (k - 3) + 3
            m1 = mid - glued
            m2 = top - mid
            margin = np.minimum(m1, m2)
            if np.any(margin < 0):
                rep.failures.append((b, k))
            i = int(np.argmin(margin))
            if margin[i] < rep.min_margin:
                rep.min_margin, rep.argmin = float(margin[i]), k
    return rep


def bound_table(k_values, names=("burr", "addario_general", "arbo", "main")) -> list[dict]:
    rows = []
    for k in k_values:
        row = {"k": k}
        for nm in names:
            row[nm] = float(evaluate_bound(BoundSpec(nm, k=k)))
        rows.append(row)
    return rows
