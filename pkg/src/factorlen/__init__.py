"""Factorization length distributions of numerical semigroups, split by
residue class, with their limiting densities."""

from .arith import (
    InvalidSemigroupError,
    NumericalSemigroup,
    gcd_list,
    h_poly,
    lcm_list,
    new_semigroup,
    stirling2,
)
from .asymptotics import (
    ConvergenceReport,
    DensityModel,
    LengthStats,
    delta_one_probability_mc,
    density_eval,
    density_integral,
    equidistribution_check,
    stats,
    weighted_integral,
    zeta_ratio,
)
from .enumeration import (
    Factorization,
    LengthDistribution,
    OracleLimitError,
    factorizations_bruteforce,
    length_distribution,
    length_distribution_range,
    length_distributions,
)
from .modular import (
    GammaSubgroup,
    MomentResult,
    ResidueHistogram,
    attainable,
    common_zero_check,
    exponential_sum,
    gamma_subgroup,
    leading_term,
    residue_histogram,
    restricted_moment,
)

__version__ = "0.1.0"
