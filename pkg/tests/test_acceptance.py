"""Exit criteria for the package, one PASS/FAIL line each.

Criteria 1, 3 and 6 share a single exhaustive pass over every GF(2) period of
length 6, 12 and 18; criterion 2 and the first half of criterion 3 share the
random GF(3) runs.
"""
import statistics
import time

import numpy as np
import pytest

from periodlc import (
    LfsrSpec,
    PeriodicSequence,
    Polynomial,
    PrimeField,
    berlekamp_massey,
    cyclotomic_prime_power,
    factor_period,
    is_primitive_root_mod_p2,
    lc_general,
    lc_period_qn,
    lfsr_regenerate,
    multiplicative_order,
    naive_minpoly,
    phi_frobenius_power,
    poly_mul,
)

from conftest import record_criterion

EXHAUSTIVE_PERIODS = [6, 12, 18]
RANDOM_GF3_PERIODS = [15, 45, 225]
RANDOM_TRIALS = 1000
EXHAUSTIVE_BUDGET_SECONDS = 120.0
SLOPE_LIMIT = 1.3
SPEEDUP_FLOOR = 20.0


@pytest.fixture(scope="module")
def exhaustive_gf2():
    stats = {N: dict(count=0, mismatch=0, bm_mismatch=0, loop_violations=0,
                     regen_failures=0, worst_loops=0) for N in EXHAUSTIVE_PERIODS}
    t0 = time.perf_counter()
    for N in EXHAUSTIVE_PERIODS:
        shape = factor_period(N, 2)
        bound = shape.loop_bound()
        st = stats[N]
        shifts = np.arange(N, dtype=np.int64)
        for x in range(2 ** N):
            arr = (x >> shifts) & 1
            arr.flags.writeable = False
            vals = arr.tolist()
            s = PeriodicSequence(arr, shape)
            r = lc_general(s)
            o = naive_minpoly(s)
            L, _ = berlekamp_massey(vals + vals, 2)
            f = r.expanded
            st["count"] += 1
            if r.complexity != o.complexity or f != o.expanded:
                st["mismatch"] += 1
            if L != o.complexity:
                st["bm_mismatch"] += 1
            loops = r.trace.loop_count
            st["worst_loops"] = max(st["worst_loops"], loops)
            if loops > bound:
                st["loop_violations"] += 1
            c = r.complexity
            if c:
                regen = lfsr_regenerate(LfsrSpec(f, tuple(vals[:c])), N)
            else:
                regen = [0] * N
            if regen != vals:
                st["regen_failures"] += 1
    return stats, time.perf_counter() - t0


@pytest.fixture(scope="module")
def random_gf3():
    rng = np.random.default_rng(20260101)
    stats = {}
    for N in RANDOM_GF3_PERIODS:
        shape = factor_period(N, 3)
        mismatch = violations = worst = 0
        for _ in range(RANDOM_TRIALS):
            s = PeriodicSequence.from_values(rng.integers(0, 3, N), 3)
            r, o = lc_general(s), naive_minpoly(s)
            if (r.complexity, r.expanded) != (o.complexity, o.expanded):
                mismatch += 1
            worst = max(worst, r.trace.loop_count)
            violations += r.trace.loop_count > shape.loop_bound()
        stats[N] = dict(mismatch=mismatch, loop_violations=violations,
                        worst_loops=worst, bound=shape.loop_bound())
    return stats


def test_criterion_1_exhaustive_gf2(exhaustive_gf2):
    stats, elapsed = exhaustive_gf2
    total = sum(s["count"] for s in stats.values())
    bad = sum(s["mismatch"] + s["bm_mismatch"] for s in stats.values())
    assert [stats[N]["count"] for N in EXHAUSTIVE_PERIODS] == [2 ** 6, 2 ** 12, 2 ** 18]
    passed = bad == 0 and elapsed <= EXHAUSTIVE_BUDGET_SECONDS
    record_criterion(
        1, passed,
        f"{total} GF(2) sequences (N=6,12,18), {bad} mismatches vs gcd oracle and "
        f"Berlekamp-Massey, {elapsed:.1f}s (budget {EXHAUSTIVE_BUDGET_SECONDS:.0f}s)",
    )
    assert bad == 0
    assert elapsed <= EXHAUSTIVE_BUDGET_SECONDS


def test_criterion_2_random_gf3(random_gf3):
    bad = sum(s["mismatch"] for s in random_gf3.values())
    record_criterion(
        2, bad == 0,
        f"{RANDOM_TRIALS} random GF(3) sequences at each N in {RANDOM_GF3_PERIODS}, "
        f"{bad} (c, f) mismatches vs gcd oracle",
    )
    assert bad == 0


def test_criterion_3_loop_bounds(exhaustive_gf2, random_gf3):
    stats, _ = exhaustive_gf2
    general_bad = sum(s["loop_violations"] for s in stats.values())
    general_bad += sum(s["loop_violations"] for s in random_gf3.values())

    rng = np.random.default_rng(729)
    n, q = 6, 3
    qn_bound = n * (q - 1) + 1
    qn_worst = 0
    qn_bad = 0
    for _ in range(RANDOM_TRIALS):
        s = PeriodicSequence.from_values(rng.integers(0, q, q ** n), q)
        loops = lc_period_qn(s).trace.loop_count
        qn_worst = max(qn_worst, loops)
        qn_bad += loops > qn_bound

    worst = {N: stats[N]["worst_loops"] for N in EXHAUSTIVE_PERIODS}
    worst.update({N: random_gf3[N]["worst_loops"] for N in RANDOM_GF3_PERIODS})
    passed = general_bad == 0 and qn_bad == 0
    record_criterion(
        3, passed,
        f"[n(q-1)+1](m+1) exceeded {general_bad} times (worst per N {worst}); "
        f"period 3^6 bound {qn_bound} exceeded {qn_bad} times (worst {qn_worst})",
    )
    assert general_bad == 0
    assert qn_bad == 0


def test_criterion_4_orders_lift():
    failures = []
    checked = 0
    for q, p in [(2, 3), (2, 5), (3, 5), (2, 11)]:
        if not is_primitive_root_mod_p2(q, p):
            continue
        for k in range(1, 5):
            checked += 1
            if multiplicative_order(q, p ** k) != (p - 1) * p ** (k - 1):
                failures.append((q, p, k))
    record_criterion(4, not failures and checked == 16,
                     f"{checked} (q, p, k) orders equal (p-1)p^(k-1); failures {failures}")
    assert checked == 16
    assert not failures


def test_criterion_5_frobenius_dilation():
    failures = []
    checked = 0
    for q in (2, 3):
        F = PrimeField(q)
        for p in (3, 5):
            if p == q:
                continue
            for k in (1, 2):
                phi = cyclotomic_prime_power(p, k, F)
                power = Polynomial.one(F)
                done = 0
                for j in (1, 2, 3):
                    while done < q ** j:
                        power = poly_mul(power, phi)
                        done += 1
                    checked += 1
                    if power != phi_frobenius_power(p, k, q ** j, F):
                        failures.append((q, p, k, j))
    record_criterion(5, not failures,
                     f"{checked} cases of Phi_(p^k)^(q^j) == Phi_(p^k)(x^(q^j)); "
                     f"failures {failures}")
    assert not failures


def test_criterion_6_regeneration(exhaustive_gf2):
    stats, _ = exhaustive_gf2
    bad = sum(s["regen_failures"] for s in stats.values())
    total = sum(s["count"] for s in stats.values())
    record_criterion(6, bad == 0,
                     f"LFSR from (f, first c symbols) regenerated {total - bad}/{total} periods")
    assert bad == 0


def _median_time(fn, trials):
    times = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def test_criterion_7_performance():
    rng = np.random.default_rng(7)
    Ns, medians = [], []
    for m in range(6, 12):
        N = 2 * 3 ** m
        s = PeriodicSequence.from_values(rng.integers(0, 2, N), 2)
        lc_general(s)  # warm-up
        Ns.append(N)
        medians.append(_median_time(lambda: lc_general(s), 10))
    slope = float(np.polyfit(np.log(Ns), np.log(medians), 1)[0])

    N = 2 * 3 ** 7
    s = PeriodicSequence.from_values(rng.integers(0, 2, N), 2)
    prefix = s.tolist() * 2
    fast = _median_time(lambda: lc_general(s), 10)
    slow = _median_time(lambda: berlekamp_massey(prefix, 2), 10)
    speedup = slow / fast
    passed = slope <= SLOPE_LIMIT and speedup >= SPEEDUP_FLOOR
    record_criterion(
        7, passed,
        f"log-log slope {slope:.3f} (limit {SLOPE_LIMIT}) over N=1458..354294; "
        f"N=4374 speedup over Berlekamp-Massey {speedup:.0f}x (floor {SPEEDUP_FLOOR:.0f}x)",
    )
    assert slope <= SLOPE_LIMIT
    assert speedup >= SPEEDUP_FLOOR
