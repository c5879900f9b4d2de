"""
The limiting density of normalized lengths
==========================================

For k >= 3 generators, the lengths of n divided by n settle into a
piecewise polynomial density F supported on [1/n_k, 1/n_1].
"""

from fractions import Fraction

import numpy as np

from factorlen import DensityModel, density_eval, density_integral, new_semigroup, weighted_integral

S = new_semigroup([6, 9, 20])
D = DensityModel(S)
lo, hi = D.support
print("support", lo, hi, "breakpoints", D.breakpoints)

x = np.linspace(float(lo), float(hi), 9)
for xi, fi in zip(x, density_eval(D, x)):
    print(f"F({xi:.4f}) = {fi:.6f}")

# integrals are exact rationals
print("total mass", density_integral(D, lo, hi, exact=True))
print("mass left of 1/9", density_integral(D, lo, Fraction(1, 9), exact=True))

# first moment, against the sum of reciprocals over k
print("mean", weighted_integral(D, lambda t: t), sum(1 / g for g in S.generators) / S.k)

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    xs = np.linspace(0.04, 0.18, 600)
    plt.plot(xs, density_eval(D, xs))
    plt.xlabel("length / n")
    plt.title(str(S))
    plt.savefig("density.png")
