"""Self-check suites run by ``factorlen verify``.

Each suite takes a :class:`VerifyConfig` and returns ``(passed, detail)``.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

from .arith import NumericalSemigroup, new_semigroup
from .enumeration import factorizations_bruteforce, length_distribution_range
from .modular import (
    attainable,
    common_zero_check,
    exponential_sum,
    gamma_subgroup,
    residue_histogram,
)


@dataclass(frozen=True)
class VerifyConfig:
    semigroup: NumericalSemigroup
    max_n: int = 200
    modulus_max: int = 12
    seed: int = 0

    def extra_semigroups(self, count: int = 3) -> list[NumericalSemigroup]:
        """A few seeded random semigroups to widen coverage."""
        rng = random.Random(self.seed)
        out = []
        while len(out) < count:
            k = rng.randint(2, 4)
            gens = sorted(rng.sample(range(2, 41), k))
            if math.gcd(*gens) == 1:
                out.append(new_semigroup(gens))
        return out


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def oracle_equivalence(cfg: VerifyConfig):
    # random extras may have tiny generators, which makes brute force slow
    jobs = [(cfg.semigroup, min(cfg.max_n, 500))]
    jobs += [(S, min(cfg.max_n, 150)) for S in cfg.extra_semigroups()]
    checked = 0
    for S, cap in jobs:
        for d in length_distribution_range(S, 0, cap):
            brute = Counter(f.length for f in factorizations_bruteforce(S, d.element))
            if dict(brute) != d.counts:
                return False, f"{S}: DP and brute force differ at n={d.element}"
            checked += 1
    return True, f"{checked} (semigroup, n) pairs agree"


def gamma_order(cfg: VerifyConfig):
    for S in [cfg.semigroup, *cfg.extra_semigroups()]:
        for N in range(1, cfg.modulus_max + 1):
            try:
                G = gamma_subgroup(S, N)
            except AssertionError as exc:
                return False, str(exc)
            for t in G.elements:
                if any(g * t % N != G.alpha[t] for g in S.generators):
                    return False, f"{S}: alpha depends on the generator at N={N}, t={t}"
    return True, f"|Gamma| = gcd(delta, N) for N <= {cfg.modulus_max}"


def exponential_sums(cfg: VerifyConfig):
    S = cfg.semigroup
    for N in range(1, cfg.modulus_max + 1):
        for i in range(N):
            for n in range(N):
                try:
                    exponential_sum(S, N, i, n, check=True)
                except AssertionError as exc:
                    return False, str(exc)
        for r in range(N):
            for t in range(N):
                try:
                    common_zero_check(S, N, r, t)
                except AssertionError as exc:
                    return False, str(exc)
    return True, f"closed forms match complex sums for N <= {cfg.modulus_max}"


def fourier_consistency(cfg: VerifyConfig):
    S = cfg.semigroup
    for d in length_distribution_range(S, 0, cfg.max_n):
        n = d.element
        for N in range(1, cfg.modulus_max + 1):
            for p in range(4):
                parts = [sum(c * l ** p for l, c in d.counts.items() if l % N == i)
                         for i in range(N)]
                if sum(parts) != d.moment(p):
                    return False, f"restricted moments do not sum up at n={n}, N={N}, p={p}"
            hist = residue_histogram(S, n, N, dist=d)
            for i, c in enumerate(hist.counts):
                if c and not attainable(S, N, i, n):
                    return False, f"unattainable residue {i} mod {N} is hit at n={n}"
    return True, f"moments split over residues for n <= {cfg.max_n}, p <= 3"


def delta_congruence(cfg: VerifyConfig):
    S = cfg.semigroup
    d1 = S.delta
    inv = pow(S.generators[0], -1, d1) if d1 > 1 else 0
    last = None
    for d in length_distribution_range(S, 0, cfg.max_n):
        if not d:
            continue
        expected = d.element * inv % d1
        if any(l % d1 != expected for l in d.counts):
            return False, f"lengths of {d.element} are not all {expected} mod {d1}"
        last = (d.element, expected)
    if last is None:
        return True, "no elements in range"
    return True, f"all lengths of {last[0]} are {last[1]} (mod {d1})"


SUITES = [
    ("oracle-equivalence", oracle_equivalence),
    ("gamma-order", gamma_order),
    ("exponential-sum", exponential_sums),
    ("fourier-consistency", fourier_consistency),
    ("delta-congruence", delta_congruence),
]


def run_suites(cfg: VerifyConfig) -> list[SuiteResult]:
    results = []
    for name, suite in SUITES:
        passed, detail = suite(cfg)
        results.append(SuiteResult(name, bool(passed), detail))
    return results
