"""
Lengths of a McNugget number by residue class
=============================================

Count every factorization of 1000 in <6, 9, 20> and sort the lengths
into classes mod N. For most moduli the classes share the total almost
evenly.
"""

from factorlen import length_distribution, new_semigroup, residue_histogram

S = new_semigroup([6, 9, 20])
d = length_distribution(S, 1000)
print(f"{S}: n = 1000 has {d.total} factorizations, lengths {min(d.lengths)}..{max(d.lengths)}")

# one distribution is enough, every modulus reuses it
for N in range(2, 9):
    h = residue_histogram(S, 1000, N, dist=d)
    cells = "  ".join(f"{c:>4} {p}" for c, p in zip(h.counts, h.display_proportions()))
    print(f"N={N}:  {cells}")

# when delta = 6, lengths of 5000 in <17,29,47,65> land in one class mod 6
T = new_semigroup([17, 29, 47, 65])
print(T, "delta =", T.delta)
print(residue_histogram(T, 5000, 6).counts)
