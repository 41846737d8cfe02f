import pytest

from humplab import formulas as F
from humplab.combinat import binomial, catalan
from humplab.partitions import hook_sum, s21_closed, syt_count
from humplab.paths import PathFamily, total_humps


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 10)])
def test_hc_closed(n, expected):
    assert F.hc_closed(n) == expected


def test_hc_closed_rejects_zero():
    with pytest.raises(ValueError):
        F.hc_closed(0)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 3), (6, 462)])
def test_hc_recurrence(n, expected):
    assert F.hc_recurrence(n) == expected


def test_hc_routes_agree():
    for n in range(1, 201):
        assert F.hc_closed(n) == F.hc_recurrence(n)
    for n in range(1, 11):
        assert F.hc_closed(n) == total_humps(PathFamily("dyck", n))


def test_hc_syt_bridge():
    for n in range(1, 61):
        assert F.hc_closed(n) == syt_count((n,) + (1,) * n)


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 0), (2, 1), (3, 3)])
def test_hm_closed(n, expected):
    assert F.hm_closed(n) == expected
    assert F.hm_recurrence(n) == expected


def test_hm_routes_agree():
    for n in range(201):
        assert F.hm_closed(n) == F.hm_recurrence(n)
    for n in range(13):
        assert F.hm_closed(n) == total_humps(PathFamily("motzkin", n))
    assert F.hm_recurrence(8) == F.hm_closed(8)


def test_hm_is_s21_minus_one():
    for n in range(61):
        assert F.hm_closed(n) == hook_sum((2, 1), n) - 1
    for n in range(2, 61):
        assert F.hm_closed(n) == s21_closed(n) - 1


def test_sd():
    assert [F.sd_closed(n) for n in (1, 2)] == [2, 6]
    assert F.sd_closed(5) == 2 * F.hc_closed(5)
    for n in range(1, 201):
        assert F.sd_closed(n) == 2 * F.hc_closed(n)


def test_sm():
    assert [F.sm_recurrence(n) for n in (0, 1, 2)] == [1, 1, 3]
    assert [F.sm_closed(n) for n in (1, 2)] == [1, 3]
    assert F.sm_recurrence(6) == F.sm_closed(6)
    assert F.sm_closed(10) == 2 * F.hm_closed(10) + 1
    for n in range(201):
        assert F.sm_closed(n) == F.sm_recurrence(n) == 2 * F.hm_closed(n) + 1


PAPER_HS40 = [2, 5, 12, 35, 100, 315, 980, 3234, 10584, 36036, 121968, 424710]


def test_hs40_listed_values():
    assert [F.hs40(n) for n in range(1, 13)] == PAPER_HS40


def test_hs40_closed():
    assert F.hs40_closed(2) == 5
    assert F.hs40_closed(3) == 12
    assert F.hs40_closed(7) == F.hs40(7)
    for n in range(1, 201):
        assert F.hs40(n) == F.hs40_closed(n)


def test_hs40_enumeration():
    for n in range(1, 11):
        assert F.hs40(n) == total_humps(PathFamily("doubledyck", n))


def test_s40_is_catalan_product():
    assert F.s40(0) == 1
    assert F.s40(3) == catalan(2) ** 2


def test_b_is_hm():
    assert F.b_closed is F.hm_closed


def test_trinomial_sum():
    assert F.trinomial_sum(4) == sum(binomial(4, j) * binomial(4 - j, j) for j in range(3))


def test_sequences_registry():
    assert set(F.SEQUENCES) == {"HC", "HM", "SD", "SM", "HS40", "B", "catalan", "motzkin"}
    assert "rec" not in F.SEQUENCES["SD"].routes
    assert "rec" not in F.SEQUENCES["HS40"].routes
    for name, spec in F.SEQUENCES.items():
        n = spec.first_n + 3
        values = {route: fn(n) for route, fn in spec.routes.items()}
        assert len(set(values.values())) == 1, (name, values)
    assert F.sequence_value("HC", 3) == 10
