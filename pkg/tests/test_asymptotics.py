import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, special

from factorlen import (
    DensityModel,
    delta_one_probability_mc,
    density_eval,
    density_integral,
    equidistribution_check,
    leading_term,
    length_distribution,
    length_distributions,
    new_semigroup,
    stats,
    weighted_integral,
    zeta_ratio,
)
from factorlen.asymptotics import zeta

from conftest import semigroups

MCNUGGET = new_semigroup([6, 9, 20])
BIG_DELTA = new_semigroup([17, 29, 47, 65])
# sum of 1/n_j over <6,9,20>, divided by k
MCNUGGET_MEAN_RATIO = (1 / 6 + 1 / 9 + 1 / 20) / 3


def quad_density(D, a, b):
    """Adaptive quadrature with the breakpoints as hints."""
    pts = [float(c) for c in D.breakpoints if a < c < b]
    val, _ = integrate.quad(lambda x: density_eval(D, x), a, b, points=pts or None,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
    return val


def piece_value(D, x, probe):
    """Polynomial piece of F containing ``probe``, evaluated at ``x``."""
    S = D.semigroup
    total = Fraction(0)
    for w, g in zip(D._weights, S.generators):
        sign = 1 if 1 - g * probe > 0 else -1
        total += w * sign * (1 - g * x) ** (S.k - 2)
    return total


def test_leading_term_examples():
    for S in (MCNUGGET, BIG_DELTA):
        k = S.k
        assert leading_term(S, 0, 1, 0, 1) == Fraction(1, math.factorial(k - 1) * S.product)
    lt = leading_term(BIG_DELTA, 0, 1, 0, 5000)
    assert lt == Fraction(125 * 10 ** 9, 9036690)
    assert abs(14500 - float(lt)) / 14500 == pytest.approx(0.046, abs=0.002)
    assert leading_term(BIG_DELTA, 0, 2, 1, 5000) == 0


def test_density_requires_three_generators():
    with pytest.raises(ValueError):
        DensityModel(new_semigroup([3, 5]))


def test_density_support_and_zero_outside():
    D = DensityModel(MCNUGGET)
    assert D.support == (Fraction(1, 20), Fraction(1, 6))
    outside = np.concatenate([np.linspace(-1, 1 / 20 - 1e-9, 50),
                              np.linspace(1 / 6 + 1e-9, 2, 50)])
    assert np.all(np.abs(density_eval(D, outside)) <= 1e-12)
    # formula itself vanishes there, checked exactly
    assert D.exact(Fraction(1, 40)) == 0
    assert sum(w * (1 - g * Fraction(1, 40)) ** (3 - 2)
               for w, g in zip(D._weights, MCNUGGET.generators)) == 0


def test_density_positive_inside():
    D = DensityModel(MCNUGGET)
    xs = np.linspace(1 / 20, 1 / 6, 1001)[1:-1]
    assert np.all(density_eval(D, xs) > 0)


@settings(max_examples=30, deadline=None)
@given(semigroups(min_k=3, max_k=5, max_gen=40))
def test_density_nonnegative_and_continuous(S):
    D = DensityModel(S)
    lo, hi = (float(b) for b in D.support)
    xs = np.linspace(lo, hi, 2001)
    assert np.all(density_eval(D, xs) >= -1e-12)
    for c in D.breakpoints:
        # each side is a polynomial piece; both must reach the same value at c
        left = piece_value(D, c, c - Fraction(1, 10 ** 9))
        right = piece_value(D, c, c + Fraction(1, 10 ** 9))
        assert left == right == D.exact(c)
        assert abs(float(D.exact(c)) - density_eval(D, float(c))) < 1e-9 * max(1, float(D.exact(c)))


@settings(max_examples=30, deadline=None)
@given(semigroups(min_k=3, max_k=5, max_gen=40))
def test_density_normalized(S):
    D = DensityModel(S)
    assert density_integral(D, 0, 1, exact=True) == 1
    lo, hi = D.support
    assert abs(density_integral(D, lo, hi) - 1) < 1e-10


def test_density_integral_examples():
    D = DensityModel(MCNUGGET)
    assert density_integral(D, Fraction(1, 9), Fraction(1, 9)) == 0
    parts = (density_integral(D, Fraction(1, 20), Fraction(1, 9), exact=True)
             + density_integral(D, Fraction(1, 9), Fraction(1, 6), exact=True))
    assert parts == 1
    with pytest.raises(ValueError):
        density_integral(D, 0.2, 0.1)


@settings(max_examples=30, deadline=None)
@given(semigroups(min_k=3, max_k=4, max_gen=30),
       st.floats(0, 0.6), st.floats(0, 0.6), st.floats(0, 0.6))
def test_density_integral_additive_and_matches_quadrature(S, a, b, c):
    a, b, c = sorted((a, b, c))
    D = DensityModel(S)
    ab = density_integral(D, a, b, exact=True)
    bc = density_integral(D, b, c, exact=True)
    assert ab + bc == density_integral(D, a, c, exact=True)
    assert abs(float(ab) - quad_density(D, a, b)) < 1e-8


def test_weighted_integral_examples():
    D = DensityModel(MCNUGGET)
    assert abs(weighted_integral(D, lambda t: 1.0) - 1) < 1e-8
    assert abs(weighted_integral(D, lambda t: t) - MCNUGGET_MEAN_RATIO) < 1e-6
    # scalar-only callback goes through the point-wise path
    assert abs(weighted_integral(D, lambda t: math.cos(t))
               - integrate.quad(lambda t: math.cos(t) * density_eval(D, t), 1 / 20, 1 / 6,
                                points=[1 / 9])[0]) < 1e-8
    with pytest.raises(ValueError):
        weighted_integral(D, lambda t: np.where(t > 0.1, np.inf, 1.0))


@settings(max_examples=20, deadline=None)
@given(semigroups(min_k=3, max_k=5, max_gen=40))
def test_mean_identity(S):
    # int t F(t) dt = (1/k) sum 1/n_j
    D = DensityModel(S)
    expected = sum(1 / g for g in S.generators) / S.k
    assert abs(weighted_integral(D, lambda t: t) - expected) < 1e-6


def test_moment_convergence_mcnugget():
    D = DensityModel(MCNUGGET)
    ns = [int(round(x)) for x in np.geomspace(500, 10_000, 10)]
    dists = list(length_distributions(MCNUGGET, ns))
    for p in (0, 1, 2):
        limit = weighted_integral(D, lambda t: t ** p)
        gaps = [abs(float(Fraction(d.moment(p), d.total * d.element ** p)) - limit) / limit
                for d in dists]
        half = len(gaps) // 2
        assert np.mean(gaps[half:]) <= np.mean(gaps[:half])
        assert gaps[-1] < 0.05


def test_equidistribution_examples():
    ns = [250, 500, 1000]
    r = equidistribution_check(BIG_DELTA, 4, 1, 0, 1, [1000, 2000, 5000])
    assert all(row.empirical == 0 and row.limit == 0 for row in r.rows)
    r = equidistribution_check(MCNUGGET, 5, 3, 0, 1, ns)
    assert r.rows[-1].empirical == Fraction(92, 465)
    assert r.rows[-1].limit == pytest.approx(0.2, abs=1e-12)
    assert r.final_gap < 0.005
    r = equidistribution_check(MCNUGGET, 1, 0, Fraction(1, 9), Fraction(1, 9),
                               [900, 1800, 3600, 7200])
    assert all(row.limit == 0 for row in r.rows)
    assert float(r.rows[-1].empirical) < float(r.rows[0].empirical)


def test_equidistribution_interval_limit():
    # interval strictly inside the support: limit is (m/N) int_a^b F
    D = DensityModel(BIG_DELTA)
    a, b = Fraction(1, 40), Fraction(1, 25)
    r = equidistribution_check(BIG_DELTA, 4, 0, a, b, [9998])
    expected = 2 / 4 * density_integral(D, a, b)
    assert r.rows[0].limit == pytest.approx(expected, rel=1e-12)
    assert r.final_gap < 0.02


def test_stats():
    st0 = stats(MCNUGGET, 0)
    assert st0.mean == 0 and st0.median == 0 and st0.mode == 0 and st0.size == 1
    s = stats(MCNUGGET, 1000)
    assert abs(float(s.mean) - 1000 * MCNUGGET_MEAN_RATIO) / (1000 * MCNUGGET_MEAN_RATIO) < 0.03
    empty = stats(BIG_DELTA, 5000, 2, 1)
    assert empty.empty and empty.mean is None and empty.mode is None
    with pytest.raises(ValueError):
        stats(MCNUGGET, 10, 3)


def test_stats_against_expanded_multiset():
    d = length_distribution(MCNUGGET, 600)
    values = sorted(l for l, c in d.counts.items() for _ in range(c))
    s = stats(MCNUGGET, 600, dist=d)
    assert s.mean == Fraction(sum(values), len(values))
    assert s.variance == Fraction(sum(v * v for v in values), len(values)) - s.mean ** 2
    assert s.median == values[(len(values) - 1) // 2]
    top = max(d.counts.values())
    assert s.mode == min(l for l in d.counts if d.counts[l] == top)


@pytest.mark.parametrize("s", [1.5, 2, 3, 4.5, 9, 10])
def test_zeta_against_scipy_and_mpmath(s):
    assert abs(zeta(s) - special.zeta(s)) < 1e-12
    assert abs(zeta(s) - float(mpmath.zeta(s))) < 1e-12


@pytest.mark.parametrize("k, expected", [
    (2, "0.0000"), (3, "0.7308"), (4, "0.9004"), (5, "0.9581"), (6, "0.9811"),
    (7, "0.9912"), (8, "0.9958"), (9, "0.9979"), (10, "0.9990"),
])
def test_zeta_ratio_table(k, expected):
    assert f"{zeta_ratio(k):.4f}" == expected
    if k > 2:
        assert abs(zeta_ratio(k) - float(mpmath.zeta(k) / mpmath.zeta(k - 1))) < 1e-10


def test_zeta_ratio_monotone():
    vals = [zeta_ratio(k) for k in range(3, 11)]
    assert all(a < b < 1 for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        zeta_ratio(1)


def test_monte_carlo():
    est = delta_one_probability_mc(3, 10 ** 4, 10 ** 5, 42)
    assert abs(est - 0.7308) < 0.01
    assert delta_one_probability_mc(2, 10 ** 4, 20_000, 7) < 0.01
    assert delta_one_probability_mc(4, 100, 1, 3) == delta_one_probability_mc(4, 100, 1, 3)
    assert delta_one_probability_mc(3, 1000, 5000, 1) == delta_one_probability_mc(3, 1000, 5000, 1)
    with pytest.raises(ValueError):
        delta_one_probability_mc(3, 2, 10, 0)
