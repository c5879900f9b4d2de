"""Length multisets of semigroup elements.

Two independent routes:

* :func:`factorizations_bruteforce` enumerates every factorization. It is
  the verification oracle and refuses large inputs.
* :func:`length_distribution` / :func:`length_distribution_range` count
  factorizations by length with a knapsack-style dynamic program. This is
  coefficient extraction of ``prod_j 1/(1 - w z^{n_j})`` at ``z^n``.

The DP walks values upward. Writing ``T_j[v]`` for the length histogram of
``v`` using only the first ``j`` generators,

    T_j[v] = T_{j-1}[v] + shift(T_j[v - n_j])

where ``shift`` moves every length up by one. No row further than ``n_k``
back is ever read, so each ``T_j`` lives in a ring buffer of ``n_k + 1``
rows and results come out in increasing ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .arith import NumericalSemigroup

__all__ = [
    "Factorization",
    "LengthDistribution",
    "OracleLimitError",
    "factorizations_bruteforce",
    "factorization_count",
    "length_distribution",
    "length_distribution_range",
    "length_distributions",
]

BRUTEFORCE_MAX_N = 5_000
BRUTEFORCE_MAX_RESULTS = 10_000_000

_INT64_MAX = np.iinfo(np.int64).max


class OracleLimitError(RuntimeError):
    """The brute-force oracle was asked for more than it is allowed to do."""


@dataclass(frozen=True)
class Factorization:
    coefficients: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.coefficients)

    def value(self, S: NumericalSemigroup) -> int:
        return sum(a * g for a, g in zip(self.coefficients, S.generators))


@dataclass(frozen=True)
class LengthDistribution:
    """Multiset ``L[[n]]`` stored as ``{length: multiplicity}``.

    Only nonzero multiplicities are kept; keys are in increasing order.
    """

    element: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        """Number of factorizations of ``element``."""
        return sum(self.counts.values())

    @property
    def lengths(self) -> list[int]:
        return list(self.counts)

    def __bool__(self):
        return bool(self.counts)

    def moment(self, p: int) -> int:
        """Sum of ``l**p`` over the multiset."""
        return sum(c * l ** p for l, c in self.counts.items())

    def restrict(self, N: int, i: int) -> "LengthDistribution":
        """Sub-multiset of lengths congruent to ``i`` mod ``N``."""
        return LengthDistribution(
            self.element,
            {l: c for l, c in self.counts.items() if l % N == i})


def factorizations_bruteforce(S: NumericalSemigroup, n: int, *,
                              max_n: int = BRUTEFORCE_MAX_N,
                              max_results: int = BRUTEFORCE_MAX_RESULTS,
                              ) -> list[Factorization]:
    """All factorizations of ``n``, in lexicographic order of coefficients.

    Returns an empty list when ``n`` is not in ``S``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > max_n:
        raise OracleLimitError(
            f"n={n} exceeds the brute-force limit {max_n}")
    gens = S.generators
    k = len(gens)
    out: list[Factorization] = []
    coeffs = [0] * k

    def rec(j: int, rest: int):
        if j == k - 1:
            if rest % gens[j] == 0:
                coeffs[j] = rest // gens[j]
                if len(out) >= max_results:
                    raise OracleLimitError(
                        f"more than {max_results} factorizations of {n}")
                out.append(Factorization(tuple(coeffs)))
            return
        for a in range(rest // gens[j] + 1):
            coeffs[j] = a
            rec(j + 1, rest - a * gens[j])
        coeffs[j] = 0

    rec(0, n)
    return out


def factorization_count(S: NumericalSemigroup, n_hi: int) -> list[int]:
    """``|L[[v]]|`` for every ``0 <= v <= n_hi`` (exact ints)."""
    totals = [0] * (n_hi + 1)
    totals[0] = 1
    for g in S.generators:
        for v in range(g, n_hi + 1):
            totals[v] += totals[v - g]
    return totals


def _rows(S: NumericalSemigroup, n_hi: int) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(v, histogram)`` for ``v = 0..n_hi``; the array is reused."""
    gens = S.generators
    k = len(gens)
    width = n_hi // gens[0] + 1
    # Every cell of row v is bounded by |L[[v]]|, so this decides up front
    # whether int64 can hold the whole table.
    dtype = np.int64 if max(factorization_count(S, n_hi)) <= _INT64_MAX else object
    ring = gens[-1] + 1
    buf = np.zeros((k, ring, width), dtype=dtype)
    for v in range(n_hi + 1):
        slot = v % ring
        prev = np.zeros(width, dtype=dtype)
        if v == 0:
            prev[0] = 1
        for j, g in enumerate(gens):
            row = buf[j, slot]
            row[...] = prev
            if v >= g:
                row[1:] += buf[j, (v - g) % ring, :-1]
            prev = row
        yield v, prev


def _to_distribution(v: int, row: np.ndarray) -> LengthDistribution:
    idx = np.flatnonzero(row)
    return LengthDistribution(v, {int(l): int(row[l]) for l in idx})


def length_distributions(S: NumericalSemigroup,
                         ns: Iterable[int]) -> Iterator[LengthDistribution]:
    """Distributions for the given elements, in increasing order, from a
    single DP sweep."""
    wanted = sorted(set(ns))
    if wanted and wanted[0] < 0:
        raise ValueError("elements must be nonnegative")
    return _select(S, wanted)


def _select(S, wanted):
    if not wanted:
        return
    targets = set(wanted)
    for v, row in _rows(S, wanted[-1]):
        if v in targets:
            yield _to_distribution(v, row)


def length_distribution(S: NumericalSemigroup, n: int) -> LengthDistribution:
    """Length multiset of ``n``; empty when ``n`` is not in ``S``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return next(length_distributions(S, [n]))


def length_distribution_range(S: NumericalSemigroup, n_lo: int,
                              n_hi: int) -> Iterator[LengthDistribution]:
    """Distributions for every ``n_lo <= n <= n_hi``, in increasing ``n``."""
    if not 0 <= n_lo <= n_hi:
        raise ValueError(f"invalid range [{n_lo}, {n_hi}]")
    return _select(S, range(n_lo, n_hi + 1))
