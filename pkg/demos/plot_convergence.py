"""
Equidistribution across residue classes
========================================

The share of factorizations whose length is i mod N and whose normalized
length falls in [alpha, beta] tends to (m/N) times the mass of F there.
"""

from fractions import Fraction

from factorlen import equidistribution_check, new_semigroup

S = new_semigroup([6, 9, 20])
schedule = [250, 500, 1000, 2000, 4000]

for i in range(5):
    rep = equidistribution_check(S, 5, i, Fraction(1, 20), Fraction(1, 6), schedule)
    gaps = ", ".join(f"{g:.4f}" for g in rep.gaps)
    print(f"i={i}: limit {rep.rows[-1].limit:.4f}, gaps {gaps}")

# delta = 6 for <17,29,47,65>, so m = 2 mod 4: odd classes stay empty for even n
T = new_semigroup([17, 29, 47, 65])
rep = equidistribution_check(T, 4, 0, 0, 1, [1000, 2000, 4000])
for row in rep.rows:
    print(row.n, float(row.empirical), row.limit)
