"""Degree of a fixed vertex and the minimum degree against their limit laws.

Prints small text tables of empirical vs limiting CDFs; pipe the output of
``riglab curve`` into a plotting tool for pictures.
"""
import math

import numpy as np

from riglab import theory
from riglab.montecarlo import ExperimentConfig, empirical_cdf, run_experiment

n = 5000
r = run_experiment(ExperimentConfig("degree-cdf", n, 4000, master_seed=5))
F = empirical_cdf(r.samples)
print(f"d(v1)/n at n={n}, {r.config.trials} trials; KS distance {r.estimate.point:.4f}")
print("   x    empirical   limit")
for x in np.linspace(0.1, 0.9, 9):
    print(f"  {x:.1f}   {F(x):.4f}     {theory.degree_cdf_limit(x):.4f}")

# a vertex sees 1 - rho^2 of the others, rho being its distance to the corner (0, 1)
print(f"\nP(d(v) <= n/2) -> 1 - pi/4 = {1 - math.pi / 4:.4f}; observed {F(0.5):.4f}")

r = run_experiment(ExperimentConfig("min-degree", n, 1500, master_seed=5))
F = empirical_cdf(r.samples)
print(f"\nmin degree / sqrt(n), {r.config.trials} trials; KS distance to Rayleigh {r.estimate.point:.4f}")
print("   k    empirical   1-exp(-k^2/2)")
for k in (0.5, 1.0, 1.5, 2.0, 3.0):
    print(f"  {k:.1f}   {F(k):.4f}     {theory.min_degree_cdf_limit(k):.4f}")
