"""
Self-checks
===========

Run the built-in verification suites, the same ones behind
``factorlen verify``.
"""

from factorlen import new_semigroup
from factorlen.verify import VerifyConfig, run_suites

cfg = VerifyConfig(new_semigroup([7, 19, 25, 31]), max_n=434, modulus_max=8)
for r in run_suites(cfg):
    print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:20} {r.detail}")
