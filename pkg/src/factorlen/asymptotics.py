"""Limiting behaviour of length multisets as ``n`` grows.

The scaled lengths ``l/n`` of ``L[[n]]`` settle onto a piecewise
polynomial density supported on ``[1/n_k, 1/n_1]``. Restricting to one
residue class mod ``N`` multiplies every limit by ``m/N`` (attainable
class) or 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .arith import NumericalSemigroup
from .enumeration import LengthDistribution, length_distribution, length_distributions
from .modular import attainable, leading_term, modulus_gcd

__all__ = [
    "ConvergenceReport",
    "ConvergenceRow",
    "DensityModel",
    "LengthStats",
    "delta_one_probability_mc",
    "density_eval",
    "density_integral",
    "equidistribution_check",
    "leading_term",
    "length_stats",
    "stats",
    "weighted_integral",
    "zeta",
    "zeta_ratio",
]


class DensityModel:
    """Limiting density ``F`` of ``l/n`` for a semigroup with ``k >= 3``.

    ``F(x) = (k-1) n_1...n_k / 2 * sum_r |1 - n_r x| (1 - n_r x)^(k-3) / prod_{j != r} (n_j - n_r)``
    """

    def __init__(self, S: NumericalSemigroup):
        if S.k < 3:
            raise ValueError(
                f"the limiting density needs k >= 3 generators, {S} has {S.k}")
        self.semigroup = S
        gens = S.generators
        k = S.k
        # exact per-generator weights (k-1) prod(n) / (2 prod_{j!=r}(n_j - n_r))
        self._weights = tuple(
            Fraction((k - 1) * S.product,
                     2 * math.prod(g - gr for g in gens if g != gr))
            for gr in gens)
        self._fweights = np.array([float(w) for w in self._weights])
        self._gens = np.array(gens, dtype=float)

    @property
    def support(self) -> tuple[Fraction, Fraction]:
        gens = self.semigroup.generators
        return Fraction(1, gens[-1]), Fraction(1, gens[0])

    @property
    def breakpoints(self) -> list[Fraction]:
        return sorted(Fraction(1, g) for g in self.semigroup.generators)

    def __call__(self, x):
        return density_eval(self, x)

    def exact(self, x: Fraction) -> Fraction:
        """``F(x)`` in exact rational arithmetic."""
        x = Fraction(x)
        lo, hi = self.support
        if x < lo or x > hi:
            return Fraction(0)
        k = self.semigroup.k
        total = Fraction(0)
        for w, g in zip(self._weights, self.semigroup.generators):
            u = 1 - g * x
            total += w * abs(u) * u ** (k - 3)
        return total

    def _antiderivative(self, x: Fraction, signs: Sequence[int]) -> Fraction:
        # on a piece where sign(1 - n_r x) = s_r the integrand is
        # sum_r w_r s_r (1 - n_r x)^(k-2)
        k = self.semigroup.k
        total = Fraction(0)
        for w, g, s in zip(self._weights, self.semigroup.generators, signs):
            total -= w * s * (1 - g * x) ** (k - 1) / ((k - 1) * g)
        return total


def density_eval(D: DensityModel, x):
    """Evaluate ``F`` at a float or array; exactly 0 outside the support."""
    xs = np.asarray(x, dtype=float)
    lo, hi = (float(b) for b in D.support)
    k = D.semigroup.k
    u = 1.0 - np.multiply.outer(xs, D._gens)
    terms = D._fweights * u ** (k - 2)
    # sum_r w_r (1 - n_r x)^(k-2) vanishes identically, so F is twice the
    # positive-u part or minus twice the negative-u part; the shorter one
    # cancels less
    pos = u > 0
    pos_part = np.where(pos, terms, 0.0).sum(axis=-1)
    neg_part = np.where(pos, 0.0, terms).sum(axis=-1)
    use_pos = pos.sum(axis=-1) <= (~pos).sum(axis=-1)
    vals = np.where(use_pos, 2 * pos_part, -2 * neg_part)
    vals = np.where((xs < lo) | (xs > hi), 0.0, vals)
    return float(vals) if np.ndim(vals) == 0 else vals


def _exact_integral(D: DensityModel, a: Fraction, b: Fraction) -> Fraction:
    lo, hi = D.support
    a, b = max(a, lo), min(b, hi)
    if a >= b:
        return Fraction(0)
    cuts = [a] + [c for c in D.breakpoints if a < c < b] + [b]
    total = Fraction(0)
    gens = D.semigroup.generators
    for left, right in zip(cuts, cuts[1:]):
        mid = (left + right) / 2
        signs = [1 if 1 - g * mid > 0 else -1 for g in gens]
        total += D._antiderivative(right, signs) - D._antiderivative(left, signs)
    return total


def density_integral(D: DensityModel, alpha, beta, *, exact: bool = False):
    """``int_alpha^beta F``, integrated piece by piece in rational arithmetic.

    Float endpoints are converted to rationals exactly. Returns a float,
    or the :class:`~fractions.Fraction` itself with ``exact=True``.
    """
    a, b = Fraction(alpha), Fraction(beta)
    if a > b:
        raise ValueError(f"need alpha <= beta, got [{alpha}, {beta}]")
    value = _exact_integral(D, a, b)
    return value if exact else float(value)


def weighted_integral(D: DensityModel, g: Callable, *,
                      subdivisions: int = 10_000) -> float:
    """``int g(t) F(t) dt`` over the support by composite Simpson.

    Panels are aligned with the breakpoints so each piece integrates a
    smooth integrand. ``g`` is called with a numpy array when it accepts
    one, otherwise point by point.
    """
    if subdivisions < 2:
        raise ValueError("need at least 2 subdivisions")
    cuts = [float(c) for c in D.breakpoints]
    width = cuts[-1] - cuts[0]
    total = 0.0
    for left, right in zip(cuts, cuts[1:]):
        panels = max(2, int(round(subdivisions * (right - left) / width)))
        panels += panels % 2
        x = np.linspace(left, right, panels + 1)
        gx = _call_vectorized(g, x)
        if not np.all(np.isfinite(gx)):
            bad = x[~np.isfinite(gx)][0]
            raise ValueError(f"g is not finite at t={bad!r}")
        y = gx * density_eval(D, x)
        h = (right - left) / panels
        total += h / 3 * (y[0] + y[-1] + 4 * y[1:-1:2].sum() + 2 * y[2:-1:2].sum())
    return float(total)


def _call_vectorized(g, x):
    try:
        gx = np.asarray(g(x), dtype=float)
        if gx.shape == x.shape:
            return gx
        if gx.ndim == 0:
            return np.full_like(x, float(gx))
    except (TypeError, ValueError):
        pass
    return np.array([float(g(t)) for t in x])


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    empirical: Fraction
    limit: float
    attainable: bool

    @property
    def gap(self) -> float:
        return abs(float(self.empirical) - self.limit)


@dataclass
class ConvergenceReport:
    """Empirical restricted-interval proportions against their limit.

    The limits hold along ``n`` in one congruence class mod
    ``m``; the caller chooses the schedule.
    """

    N: int
    i: int
    alpha: Fraction
    beta: Fraction
    rows: list[ConvergenceRow] = field(default_factory=list)

    @property
    def gaps(self) -> list[float]:
        return [r.gap for r in self.rows]

    @property
    def final_gap(self) -> float:
        return self.rows[-1].gap

    def halves_improve(self) -> bool:
        """Mean gap of the second half of the schedule is no larger than the
        first half's."""
        g = self.gaps
        if len(g) < 2:
            return True
        half = len(g) // 2
        return np.mean(g[len(g) - half:]) <= np.mean(g[:half])


def equidistribution_check(S: NumericalSemigroup, N: int, i: int, alpha,
                           beta, n_list: Sequence[int]) -> ConvergenceReport:
    """Share of ``L[[n]]`` that is ``= i (mod N)`` and lies in
    ``[alpha n, beta n]``, for each ``n`` in ``n_list``."""
    if not n_list:
        raise ValueError("n_list is empty")
    a, b = Fraction(alpha), Fraction(beta)
    if a > b:
        raise ValueError(f"need alpha <= beta, got [{alpha}, {beta}]")
    m = modulus_gcd(S, N)
    share = None
    if S.k >= 3:
        share = float(Fraction(m, N) * density_integral(DensityModel(S), a, b, exact=True))
    dists = {d.element: d for d in length_distributions(S, n_list)}
    report = ConvergenceReport(N, i, a, b)
    for n in n_list:
        d = dists[n]
        ok = attainable(S, N, i, n)
        if share is None:
            limit = math.nan
        else:
            limit = share if ok else 0.0
        total = d.total
        hits = sum(c for l, c in d.counts.items()
                   if l % N == i and a * n <= l <= b * n)
        emp = Fraction(hits, total) if total else Fraction(0)
        report.rows.append(ConvergenceRow(n, emp, limit, ok))
    return report


@dataclass(frozen=True)
class LengthStats:
    """Summary of a (possibly restricted) length multiset.

    All fields are ``None`` when the multiset is empty.
    """

    size: int
    mean: Fraction | None
    variance: Fraction | None
    median: int | None
    mode: int | None

    @property
    def empty(self) -> bool:
        return self.size == 0


def length_stats(dist: LengthDistribution) -> LengthStats:
    total = dist.total
    if total == 0:
        return LengthStats(0, None, None, None, None)
    mean = Fraction(dist.moment(1), total)
    variance = Fraction(dist.moment(2), total) - mean ** 2
    cum = 0
    median = None
    for l, c in dist.counts.items():
        cum += c
        if 2 * cum >= total:
            median = l
            break
    best = max(dist.counts.values())
    mode = min(l for l, c in dist.counts.items() if c == best)
    return LengthStats(total, mean, variance, median, mode)


def stats(S: NumericalSemigroup, n: int, N: int | None = None,
          i: int | None = None, *, dist: LengthDistribution | None = None
          ) -> LengthStats:
    """Mean, variance, median and mode of ``L[[n]]``, optionally restricted
    to lengths ``= i (mod N)``."""
    if (N is None) != (i is None):
        raise ValueError("give both N and i, or neither")
    if dist is None:
        dist = length_distribution(S, n)
    if N is not None:
        if N < 1 or not 0 <= i < N:
            raise ValueError(f"i={i} is not a canonical residue mod {N}")
        dist = dist.restrict(N, i)
    return length_stats(dist)


ZETA_TERMS = 1_000_000


def zeta(s: float, terms: int = ZETA_TERMS) -> float:
    """Riemann zeta for real ``s > 1``: a direct partial sum plus an
    Euler-Maclaurin tail.

    The tail ``sum_{j >= M} j^-s`` is replaced by
    ``M^(1-s)/(s-1) + M^-s/2 + s M^(-s-1)/12``; the remainder is below
    ``s(s+1)(s+2) M^(-s-3)/720``, far under 1e-20 at the default ``M``.
    """
    if s <= 1:
        raise ValueError(f"zeta needs s > 1, got {s}")
    j = np.arange(1, terms, dtype=float)
    head = math.fsum(j ** -s)
    M = float(terms)
    tail = M ** (1 - s) / (s - 1) + M ** -s / 2 + s * M ** (-s - 1) / 12
    return head + tail


def zeta_ratio(k: int) -> float:
    """Probability ``zeta(k)/zeta(k-1)`` that ``k`` random generators with
    gcd 1 have ``delta = 1``. Exactly 0 for ``k = 2``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if k == 2:
        return 0.0
    return zeta(k) / zeta(k - 1)


def delta_one_probability_mc(k: int, R: int, trials: int, seed: int, *,
                             chunk: int = 65_536) -> float:
    """Monte Carlo share of ``delta = 1`` among uniform ``k``-tuples from
    ``{1..R}^k`` conditioned (by rejection) on gcd 1.

    Batches draw from independent child streams of ``SeedSequence(seed)``
    so the estimate depends only on the arguments.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if R < k:
        raise ValueError(f"need R >= k, got R={R}, k={k}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    children = np.random.SeedSequence(seed)
    accepted = 0
    hits = 0
    while accepted < trials:
        (child,) = children.spawn(1)
        rng = np.random.default_rng(child)
        x = rng.integers(1, R + 1, size=(chunk, k), dtype=np.int64)
        x = x[np.gcd.reduce(x, axis=1) == 1][: trials - accepted]
        d = np.gcd.reduce(np.abs(x[:, 1:] - x[:, :1]), axis=1)
        accepted += len(x)
        hits += int(np.count_nonzero(d == 1))
    return hits / trials
