import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

import factorlen.enumeration as enumeration
from factorlen import (
    OracleLimitError,
    factorizations_bruteforce,
    length_distribution,
    length_distribution_range,
    length_distributions,
    new_semigroup,
)

from conftest import semigroups


def brute_histogram(S, n):
    return dict(sorted(Counter(f.length for f in factorizations_bruteforce(S, n)).items()))


def series_expansion(gens, n_max):
    """Truncated product of geometric series in z with length marker w,
    as {(z exponent, w exponent): coefficient}."""
    poly = {(0, 0): 1}
    for g in gens:
        factor = [(a * g, a) for a in range(n_max // g + 1)]
        out = {}
        for (zv, wv), c in poly.items():
            for dz, dw in factor:
                if zv + dz <= n_max:
                    key = (zv + dz, wv + dw)
                    out[key] = out.get(key, 0) + c
        poly = out
    return poly


def test_bruteforce_examples():
    S = new_semigroup([3, 5])
    fs = factorizations_bruteforce(S, 15)
    assert [f.coefficients for f in fs] == [(0, 3), (5, 0)]
    assert [f.length for f in fs] == [3, 5]
    S = new_semigroup([6, 9, 20])
    (f,) = factorizations_bruteforce(S, 0)
    assert f.coefficients == (0, 0, 0) and f.length == 0
    assert factorizations_bruteforce(S, 7) == []


def test_bruteforce_factorizations_are_valid():
    S = new_semigroup([6, 9, 20])
    for n in range(0, 150):
        for f in factorizations_bruteforce(S, n):
            assert f.value(S) == n


def test_bruteforce_limits():
    S = new_semigroup([6, 9, 20])
    with pytest.raises(OracleLimitError):
        factorizations_bruteforce(S, 5001)
    with pytest.raises(OracleLimitError):
        factorizations_bruteforce(S, 200, max_results=10)
    with pytest.raises(ValueError):
        factorizations_bruteforce(S, -1)


def test_distribution_examples():
    assert length_distribution(new_semigroup([6, 9, 20]), 1000).total == 465
    assert length_distribution(new_semigroup([17, 29, 47, 65]), 5000).total == 14500
    d = length_distribution(new_semigroup([7, 19, 25, 31]), 434)
    assert d and all(l % 6 == 2 for l in d.counts)


def test_non_member_is_empty():
    d = length_distribution(new_semigroup([6, 9, 20]), 43)  # Frobenius number
    assert not d and d.total == 0


@settings(max_examples=40, deadline=None)
@given(semigroups(max_k=4, max_gen=40))
def test_dp_matches_bruteforce(S):
    for d in length_distribution_range(S, 0, 120):
        assert d.counts == brute_histogram(S, d.element)


@given(semigroups(max_k=4, max_gen=20))
def test_dp_matches_series_expansion(S):
    poly = series_expansion(S.generators, 60)
    for d in length_distribution_range(S, 0, 60):
        expected = {w: c for (z, w), c in sorted(poly.items()) if z == d.element}
        assert d.counts == expected


@settings(deadline=None)
@given(semigroups(max_gen=30), st.integers(0, 400))
def test_distribution_invariants(S, n):
    d = length_distribution(S, n)
    gens = S.generators
    if d:
        assert min(d.counts) >= -(-n // gens[-1])
        assert max(d.counts) <= n // gens[0]
        first = min(d.counts)
        assert all((l - first) % S.delta == 0 for l in d.counts)
    assert all(c > 0 for c in d.counts.values())
    assert list(d.counts) == sorted(d.counts)
    assert length_distribution(S, n + gens[0]).total >= d.total


def test_range_driver():
    S = new_semigroup([3, 5])
    ds = list(length_distribution_range(S, 0, 2))
    assert [(d.element, d.counts) for d in ds] == [(0, {0: 1}), (1, {}), (2, {})]
    (d,) = length_distribution_range(new_semigroup([6, 9, 20]), 1000, 1000)
    assert d.total == 465
    with pytest.raises(ValueError):
        length_distribution_range(S, 5, 3)


def test_range_equals_single_calls():
    S = new_semigroup([5, 7, 11])
    for d in length_distribution_range(S, 40, 90):
        assert d == length_distribution(S, d.element)


def test_selected_elements_in_order():
    S = new_semigroup([6, 9, 20])
    ds = list(length_distributions(S, [300, 100, 200, 100]))
    assert [d.element for d in ds] == [100, 200, 300]


def test_object_dtype_fallback(monkeypatch):
    S = new_semigroup([6, 9, 20])
    expected = length_distribution(S, 600)
    monkeypatch.setattr(enumeration, "_INT64_MAX", 10)
    d = length_distribution(S, 600)
    assert d == expected
    assert all(type(c) is int for c in d.counts.values())


def test_big_counts_stay_exact():
    # |L[[n]]| for <2,3> at n=6j is j+1; large moments exceed 64 bits
    S = new_semigroup([2, 3])
    d = length_distribution(S, 6000)
    assert d.total == 1001
    assert d.moment(12) == sum(l ** 12 for l in range(2000, 3001, 1))
