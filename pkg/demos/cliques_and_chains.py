"""Cliques are point loads, independent sets are chains.

A clique of intervals shares a point, so omega is the busiest point of the
line; an independent set is a run of intervals each ending before the next
starts, so alpha is the longest such chain.
"""
import math

from riglab.algorithms import chromatic_number, clique_number, count_containing, independence_number
from riglab.core import IntervalFamily
from riglab.generators import RngSeed, gen_scheinerman
from riglab.theory import independence_constant

toy = IntervalFamily([(1, 6), (2, 3), (4, 5)])
print("toy family", [tuple(I) for I in toy], "omega", clique_number(toy),
      "alpha", independence_number(toy).size, "chain", independence_number(toy).vertices)

print("\nomega/n, chi and the load at x = 1/2:")
for t in range(5):
    f = gen_scheinerman(20_000, RngSeed.from_master(21, t))
    w = clique_number(f)
    print(f"  omega/n {w / f.n:.4f}  chi == omega {chromatic_number(f) == w}  load(1/2)/n {count_containing(f, 0.5) / f.n:.4f}")

print(f"\nalpha/sqrt(n) against 2/sqrt(pi) = {independence_constant():.4f}:")
for n in (1_000, 10_000, 100_000):
    vals = [independence_number(gen_scheinerman(n, RngSeed.from_master(22, t))).size / math.sqrt(n)
            for t in range(10)]
    print(f"  n={n:>6}: mean {sum(vals) / len(vals):.4f}")
