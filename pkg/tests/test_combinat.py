import pytest
from hypothesis import given, strategies as st

from humplab.combinat import (
    ConsistencyError,
    binomial,
    catalan,
    exact_div,
    factorial,
    motzkin,
    motzkin_table,
)
from humplab.partitions import hook_sum
from oracles import binom_pascal, brute_paths


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial(n, expected):
    assert factorial(n) == expected


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 0, 1), (3, 5, 0), (3, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_matches_pascal_oracle():
    for n in range(40):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binom_pascal(n, k)


@given(st.integers(0, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_binomial_symmetry(nk):
    n, k = nk
    assert binomial(n, k) == binomial(n, n - k)


@given(st.integers(1, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_pascal_rule(nk):
    n, k = nk
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("n, expected", [(0, 1), (2, 2), (3, 5)])
def test_catalan_examples(n, expected):
    assert catalan(n) == expected


def test_catalan_convolution_to_200():
    c = [catalan(i) for i in range(201)]
    for n in range(1, 201):
        assert c[n] == sum(c[j - 1] * c[n - j] for j in range(1, n + 1))


def test_half_catalan_to_200():
    for k in range(1, 201):
        assert 2 * binomial(2 * k - 1, k) == (k + 1) * catalan(k)


def test_values_exceed_64_bits():
    assert binomial(140, 70) > 2**64
    assert catalan(70) > 2**63


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (4, 9)])
def test_motzkin_examples(n, expected):
    assert motzkin(n) == expected


def test_motzkin_matches_brute_force():
    for n in range(9):
        assert motzkin(n) == len(brute_paths("motzkin", n))


def test_motzkin_equals_s30():
    for n in range(26):
        assert motzkin(n) == hook_sum((3, 0), n)


def test_motzkin_table_prefix_is_stable():
    assert motzkin_table(5) == (1, 1, 2, 4, 9, 21)
    assert motzkin_table(100)[:6] == motzkin_table(5)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ConsistencyError):
        exact_div(13, 4)
