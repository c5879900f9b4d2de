"""Factorization lengths modulo ``N``.

Write ``m = gcd(delta, N)``. A residue ``i`` (mod ``N``) can only hold
lengths of ``n`` when ``n = i * n_1 (mod m)``; exactly ``N/m`` residues
qualify for any ``n``, and each of them gets an ``m/N`` share of every
power sum asymptotically.

Everything trusted here reduces to integer congruences. Complex roots of
unity only appear in the cross-checks (:func:`exponential_sum_numeric`,
the numeric half of :func:`common_zero_check`).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import NumericalSemigroup, h_poly
from .enumeration import LengthDistribution, length_distribution

__all__ = [
    "GammaSubgroup",
    "MomentResult",
    "ResidueHistogram",
    "attainable",
    "attainable_residues",
    "common_zero_check",
    "exponential_sum",
    "exponential_sum_numeric",
    "gamma_subgroup",
    "leading_term",
    "modulus_gcd",
    "residue_histogram",
    "restricted_moment",
]

TOL = 1e-9


def _check_modulus(N: int):
    if N < 1:
        raise ValueError(f"modulus must be >= 1, got {N}")


def _check_residue(N: int, i: int, name: str = "i"):
    _check_modulus(N)
    if not 0 <= i < N:
        raise ValueError(f"{name}={i} is not a canonical residue mod {N}")


def modulus_gcd(S: NumericalSemigroup, N: int) -> int:
    """``m = gcd(delta, N)``, the largest divisor of ``N`` modulo which all
    generators agree."""
    _check_modulus(N)
    return math.gcd(S.delta, N)


@dataclass(frozen=True)
class GammaSubgroup:
    """Residues ``t`` mod ``N`` with ``n_1 t = n_2 t = ... = n_k t``."""

    modulus: int
    elements: tuple[int, ...]
    alpha: dict[int, int]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generator(self) -> int:
        return self.modulus // self.order

    def __contains__(self, t):
        return t in self.alpha


def gamma_subgroup(S: NumericalSemigroup, N: int) -> GammaSubgroup:
    """Scan ``0..N-1`` for the subgroup and its multiplication automorphism.

    Raises :class:`AssertionError` if the scan disagrees with the predicted
    structure (order ``gcd(delta, N)``, generated by ``N/m``, bijective
    ``alpha``).
    """
    _check_modulus(N)
    gens = S.generators
    elements = tuple(
        t for t in range(N)
        if all((g * t - gens[0] * t) % N == 0 for g in gens[1:]))
    alpha = {t: gens[0] * t % N for t in elements}

    m = modulus_gcd(S, N)
    if len(elements) != m:
        raise AssertionError(
            f"|Gamma| = {len(elements)} but gcd(delta, N) = {m} for {S}, N={N}")
    if set(elements) != {a * (N // m) for a in range(m)}:
        raise AssertionError(f"Gamma is not generated by N/m for {S}, N={N}")
    if sorted(alpha.values()) != list(elements):
        raise AssertionError(f"alpha is not a permutation of Gamma for {S}, N={N}")
    return GammaSubgroup(N, elements, alpha)


def attainable(S: NumericalSemigroup, N: int, i: int, n: int) -> bool:
    """Whether lengths of ``n`` can be congruent to ``i`` mod ``N``."""
    _check_residue(N, i)
    m = math.gcd(S.delta, N)
    return (n - i * S.generators[0]) % m == 0


def attainable_residues(S: NumericalSemigroup, N: int, n: int) -> list[int]:
    return [i for i in range(N) if attainable(S, N, i, n)]


def exponential_sum(S: NumericalSemigroup, N: int, i: int, n: int, *,
                    check: bool = False) -> int:
    """``sum_{t in Gamma} zeta^(i alpha(t) - t n)`` for ``zeta = e^(2 pi i/N)``.

    Closed form: ``m`` when ``i n_1 = n (mod m)``, else ``0``. With
    ``check=True`` the complex sum is evaluated too and must agree.
    """
    _check_residue(N, i)
    m = math.gcd(S.delta, N)
    value = m if (i * S.generators[0] - n) % m == 0 else 0
    if check:
        z = exponential_sum_numeric(S, N, i, n)
        if abs(z - value) > TOL:
            raise AssertionError(
                f"exponential sum mismatch: closed form {value}, numeric {z}")
    return value


def exponential_sum_numeric(S: NumericalSemigroup, N: int, i: int,
                            n: int) -> complex:
    """Direct complex evaluation of the exponential sum over a scanned Gamma."""
    G = gamma_subgroup(S, N)
    total = 0j
    for t in G.elements:
        e = (i * G.alpha[t] - t * n) % N
        total += cmath.exp(2j * math.pi * e / N)
    return total


def common_zero_check(S: NumericalSemigroup, N: int, r: int, t: int) -> bool:
    """Whether ``zeta^t`` is a common zero of ``1 - zeta^(-r) z^(n_j)`` for
    every generator.

    Decided twice, numerically and via ``r, t in Gamma and alpha(t) = r``;
    disagreement raises :class:`AssertionError`.
    """
    _check_residue(N, r, "r")
    _check_residue(N, t, "t")
    numeric = all(
        abs(1 - cmath.exp(2j * math.pi * ((g * t - r) % N) / N)) < TOL
        for g in S.generators)
    G = gamma_subgroup(S, N)
    algebraic = t in G and r in G and G.alpha[t] == r
    if numeric != algebraic:
        raise AssertionError(
            f"common zero paths disagree for {S}, N={N}, r={r}, t={t}")
    return algebraic


def leading_term(S: NumericalSemigroup, p: int, N: int, i: int,
                 n: int) -> Fraction:
    """Main term of the restricted power sum, exact.

    ``p! m h_p(1/n_1, ..., 1/n_k) n^(k+p-1) / (N (k+p-1)! n_1...n_k)`` when
    ``i`` is attainable for ``n``, otherwise 0.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if not attainable(S, N, i, n):
        return Fraction(0)
    return _main_coefficient(S, p, N) * Fraction(n) ** (S.k + p - 1)


@lru_cache(maxsize=1024)
def _main_coefficient(S: NumericalSemigroup, p: int, N: int) -> Fraction:
    k = S.k
    m = math.gcd(S.delta, N)
    return (math.factorial(p) * m * h_poly(p, S.reciprocals)
            / (N * math.factorial(k + p - 1) * S.product))


@dataclass(frozen=True)
class MomentResult:
    p: int
    N: int
    i: int
    n: int
    exact: int
    attainable: bool
    leading: Fraction

    @property
    def residual(self) -> Fraction:
        return self.exact - self.leading


def restricted_moment(S: NumericalSemigroup, n: int, p: int, N: int, i: int,
                      *, dist: LengthDistribution | None = None) -> MomentResult:
    """Sum of ``l**p`` over lengths ``l`` of ``n`` with ``l = i (mod N)``.

    ``dist`` may carry a precomputed distribution of ``n``.
    """
    _check_residue(N, i)
    if p < 0:
        raise ValueError("p must be nonnegative")
    if dist is None:
        dist = length_distribution(S, n)
    elif dist.element != n:
        raise ValueError(f"distribution is for {dist.element}, not {n}")
    exact = sum(c * l ** p for l, c in dist.counts.items() if l % N == i)
    return MomentResult(p, N, i, n, exact, attainable(S, N, i, n),
                        leading_term(S, p, N, i, n))


def round_half_even(x: Fraction, places: int = 4) -> str:
    """Render ``x`` with ``places`` decimals, ties to even."""
    q = round(Fraction(x) * 10 ** places)
    sign = "-" if q < 0 else ""
    q = abs(q)
    if places == 0:
        return f"{sign}{q}"
    return f"{sign}{q // 10 ** places}.{q % 10 ** places:0{places}d}"


@dataclass(frozen=True)
class ResidueHistogram:
    element: int
    modulus: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def proportions(self) -> tuple[Fraction, ...] | None:
        """Exact shares per residue; ``None`` when ``n`` has no factorization."""
        total = self.total
        if total == 0:
            return None
        return tuple(Fraction(c, total) for c in self.counts)

    def display_proportions(self, places: int = 4) -> list[str]:
        props = self.proportions
        if props is None:
            return ["nan"] * self.modulus
        return [round_half_even(x, places) for x in props]


def residue_histogram(S: NumericalSemigroup, n: int, N: int, *,
                      dist: LengthDistribution | None = None) -> ResidueHistogram:
    """Number of lengths of ``n`` in each residue class mod ``N``."""
    _check_modulus(N)
    if dist is None:
        dist = length_distribution(S, n)
    counts = [0] * N
    for l, c in dist.counts.items():
        counts[l % N] += c
    return ResidueHistogram(n, N, tuple(counts))
