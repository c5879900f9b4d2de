"""
How often is delta equal to 1?
==============================

For k generators drawn at random, the probability that the gaps have
gcd 1 is zeta(k)/zeta(k-1). A seeded Monte Carlo run gives the same
answer.
"""

from factorlen import delta_one_probability_mc, zeta_ratio

for k in range(3, 11):
    print(k, f"{zeta_ratio(k):.4f}")

for seed in (1, 2, 3):
    est = delta_one_probability_mc(3, 10_000, 100_000, seed)
    print(f"seed {seed}: {est:.4f}")
