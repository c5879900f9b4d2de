"""Semigroup model and exact arithmetic helpers.

Rationals are :class:`fractions.Fraction` and counts are plain Python
``int``, so every quantity here is exact and never overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "InvalidSemigroupError",
    "NumericalSemigroup",
    "new_semigroup",
    "gcd_list",
    "lcm_list",
    "h_poly",
    "stirling2",
]


class InvalidSemigroupError(ValueError):
    """Raised when a generator list does not define a valid semigroup."""


def gcd_list(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("gcd_list needs at least one value")
    return reduce(math.gcd, values)


def lcm_list(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("lcm_list needs at least one value")
    return reduce(math.lcm, values)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup with a fixed (not necessarily minimal)
    generating list ``n_1 < n_2 < ... < n_k``.

    Use :func:`new_semigroup` to build one; the constructor validates too.
    """

    generators: tuple[int, ...]
    delta: int = field(init=False)
    lcm: int = field(init=False)

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        if len(gens) < 2:
            raise InvalidSemigroupError(
                f"need at least 2 generators, got {len(gens)}")
        if any(g <= 0 for g in gens):
            raise InvalidSemigroupError(
                f"generators must be positive: {list(gens)}")
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise InvalidSemigroupError(
                f"generators must be strictly increasing: {list(gens)}")
        g = gcd_list(gens)
        if g != 1:
            raise InvalidSemigroupError(
                f"gcd of generators is {g}, must be 1: {list(gens)}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(
            self, "delta", gcd_list(b - a for a, b in zip(gens, gens[1:])))
        object.__setattr__(self, "lcm", lcm_list(gens))

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def gcd(self) -> int:
        return 1

    @property
    def product(self) -> int:
        return math.prod(self.generators)

    @property
    def reciprocals(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(1, g) for g in self.generators)

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def new_semigroup(generators: Sequence[int]) -> NumericalSemigroup:
    """Validate ``generators`` and return the semigroup they generate.

    >>> S = new_semigroup([17, 29, 47, 65])
    >>> S.delta, S.lcm
    (6, 1506115)
    """
    if not generators:
        raise InvalidSemigroupError("generator list is empty")
    return NumericalSemigroup(tuple(generators))


def h_poly(p: int, values: Sequence[Fraction | int]) -> Fraction:
    """Complete homogeneous symmetric polynomial ``h_p`` at ``values``.

    Uses the recurrence ``h_p(x_1..x_k) = h_p(x_1..x_{k-1}) + x_k h_{p-1}(x_1..x_k)``,
    so the cost is O(k p) exact operations.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if not values:
        raise ValueError("values must be nonempty")
    h = [Fraction(1)] + [Fraction(0)] * p
    for x in values:
        x = Fraction(x)
        for q in range(1, p + 1):
            h[q] += x * h[q - 1]
    return h[p]


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(n: int, i: int) -> int:
    """Stirling number of the second kind: partitions of an ``n``-set
    into ``i`` nonempty blocks."""
    if n < 0 or i < 0:
        raise ValueError("arguments must be nonnegative")
    if i > n:
        return 0
    rows = _STIRLING_ROWS
    while len(rows) <= n:
        prev = rows[-1]
        r = len(rows)
        row = [0] * (r + 1)
        for j in range(1, r + 1):
            row[j] = j * (prev[j] if j < r else 0) + prev[j - 1]
        rows.append(row)
    return rows[n][i]
