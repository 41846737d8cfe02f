"""Acceptance criteria, one test each.

Each test records a PASS/FAIL line; ``conftest.py`` prints them at the end
of the run. Run just this module with ``pytest tests/test_acceptance.py``
or directly with ``python tests/test_acceptance.py``.
"""
import math
import time
from contextlib import contextmanager

import pytest

from humplab import _kernels, verify
from humplab import formulas as F
from humplab.combinat import ConsistencyError, binomial
from humplab.partitions import (
    generate_partitions,
    hook_sum,
    s11_closed,
    s21_closed,
    strip_sum_closed,
    syt_count,
    syt_enumerate,
)
from humplab.paths import PathFamily, count_enumerated, total_humps

RESULTS: dict[int, tuple[bool, str]] = {}

HS40_LISTED = [2, 5, 12, 35, 100, 315, 980, 3234, 10584, 36036, 121968, 424710]


@contextmanager
def criterion(num: int, title: str, time_limit: float | None = None):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as e:
        RESULTS[num] = (False, f"{title}: {type(e).__name__}: {str(e)[:200]}")
        raise
    elapsed = time.perf_counter() - t0
    if time_limit is not None and elapsed > time_limit:
        RESULTS[num] = (False, f"{title}: took {elapsed:.2f}s > {time_limit}s")
        pytest.fail(f"criterion {num} over time: {elapsed:.2f}s > {time_limit}s")
    RESULTS[num] = (True, f"{title} ({elapsed:.2f}s)")


@pytest.fixture(scope="module", autouse=True)
def _jit_warm():
    # one-time JIT compile is excluded from the timed criteria
    _kernels.walk(2, True, False, -1)


def test_c01_golden_values():
    with criterion(1, "golden HC_2,HC_3,HM_2,HM_3 via closed/rec/enum", 1.0):
        for route in ("closed", "rec", "enum"):
            hc = F.SEQUENCES["HC"].routes[route]
            hm = F.SEQUENCES["HM"].routes[route]
            assert (hc(2), hc(3)) == (3, 10), route
            assert (hm(2), hm(3)) == (1, 3), route


def test_c02_dyck_humps_enumeration():
    with criterion(2, "total humps of Dyck paths = C(2n-1,n), 1<=n<=14", 60.0):
        for n in range(1, 15):
            assert total_humps(PathFamily("dyck", n)) == binomial(2 * n - 1, n), n


def test_c03_motzkin_humps_enumeration():
    with criterion(3, "total humps of Motzkin paths = half trinomial sum, 0<=n<=16", 60.0):
        for n in range(0, 17):
            s = sum(binomial(n, j) * binomial(n - j, j) for j in range(1, n // 2 + 1))
            assert s % 2 == 0
            assert total_humps(PathFamily("motzkin", n)) == s // 2, n


def test_c04_hm_is_s21_minus_one():
    with criterion(4, "HM_n = S(2,1;n)-1 (0<=n<=60) = s21_closed-1 (2<=n<=60)"):
        for n in range(0, 61):
            assert F.hm_closed(n) == hook_sum((2, 1), n) - 1, n
        for n in range(2, 61):
            assert F.hm_closed(n) == s21_closed(n) - 1, n


def test_c05_super_dyck():
    with criterion(5, "super Dyck count = C(2n,n) = 2 HC_n (enum <=12, formula <=200)"):
        for n in range(1, 13):
            assert count_enumerated(PathFamily("superdyck", n)) == binomial(2 * n, n) == 2 * F.hc_closed(n)
        for n in range(1, 201):
            assert F.sd_closed(n) == binomial(2 * n, n) == 2 * F.hc_closed(n)


def test_c06_super_motzkin():
    with criterion(6, "SM rec = closed = enum (<=12); SM = 2 HM + 1 (<=200)"):
        for n in range(0, 13):
            assert F.sm_recurrence(n) == F.sm_closed(n) == count_enumerated(PathFamily("supermotzkin", n)), n
        for n in range(0, 201):
            assert F.sm_closed(n) == 2 * F.hm_closed(n) + 1, n


def test_c07_double_dyck():
    with criterion(7, "HS40 listed values, (n+3)/2 S(4,0;n) to 200, double-Dyck enum to 12"):
        assert [F.hs40(n) for n in range(1, 13)] == HS40_LISTED
        for n in range(1, 201):
            try:
                closed = F.hs40_closed(n)
            except ConsistencyError:  # pragma: no cover - the evenness check must never fire
                pytest.fail(f"evenness assertion fired at n={n}")
            assert F.hs40(n) == closed, n
        for n in range(1, 13):
            assert total_humps(PathFamily("doubledyck", n)) == F.hs40(n), n


def test_c08_hook_sums():
    with criterion(8, "strip sums k=2..5 (0<=n<=25) and S(1,1;n)=2^(n-1) (1<=n<=25)"):
        for k in (2, 3, 4, 5):
            for n in range(0, 26):
                assert hook_sum((k, 0), n) == strip_sum_closed(k, n), (k, n)
        for n in range(1, 26):
            assert hook_sum((1, 1), n) == s11_closed(n) == 2 ** (n - 1), n


def test_c09_hook_formula_oracle():
    with criterion(9, "|SYT(lam)| = f^lam and sum (f^lam)^2 = n! for n<=8"):
        for n in range(0, 9):
            sq = 0
            for lam in generate_partitions(n):
                f = syt_count(lam)
                assert sum(1 for _ in syt_enumerate(lam)) == f, lam
                sq += f * f
            assert sq == math.factorial(n), n


def test_c10_identity_suite():
    with criterion(10, "check_all(200, 12) passes with zero failures", 300.0):
        reports = verify.check_all(200, 12)
        ids = {r.id for r in reports}
        assert {"dyck-humps-31", "recurrence-motzkin-011", "motzkin-path-222"} <= ids
        bad = [(r.id, r.failures[:3]) for r in reports if not r.passed]
        assert not bad, bad


if __name__ == "__main__":  # pragma: no cover
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
