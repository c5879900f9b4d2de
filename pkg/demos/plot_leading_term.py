"""
Restricted power sums against their main term
=============================================

Sum l**p over the lengths l of n that are congruent to i mod N, then
compare with the exact main term. Classes that cannot be hit give 0 on
both sides.
"""

import numpy as np

from factorlen import attainable, length_distributions, new_semigroup, restricted_moment

S = new_semigroup([17, 29, 47, 65])
N, p = 4, 1
ns = [2000, 4000, 8000]

for d in length_distributions(S, ns):
    n = d.element
    for i in range(N):
        r = restricted_moment(S, n, p, N, i, dist=d)
        ratio = float(r.exact / r.leading) if r.leading else np.nan
        print(f"n={n:5d} i={i} attainable={attainable(S, N, i, n)!s:5}"
              f"  sum={r.exact:>12}  main={float(r.leading):14.1f}  ratio={ratio:.4f}")

# the ratio creeps towards 1 as n grows
