"""
Beta functions, thresholds and union bounds
===========================================

The integer-parameter incomplete beta function is a binomial tail. It feeds
the equation whose root splits the robustness bound, and the finite-n union
bounds can be compared directly with simulation.
"""

import math

from koutgraph.numerics import (binomial_cdf, cut_union_bound, reg_inc_beta,
                                robustness_union_bound, solve_alpha_star, threshold_t2b,
                                threshold_t2b_shifted, threshold_t3)

print("I_0.3(2,2) =", reg_inc_beta(0.3, 2, 2))
print("P[Bin(4, 0.2) <= 0] =", binomial_cdf(0, 4, 0.2))

for r in (2, 3, 5):
    sol = solve_alpha_star(r, 1 / math.e)
    print(f"r={r}: I_a(r,r) = a/e at a = {sol.alpha_star:.10f} (residual {sol.residual:.1e})")

for gamma in (1000, 2000):
    print(f"gamma={gamma}: log-threshold {threshold_t2b(gamma):.3f}, "
          f"plus one {threshold_t2b_shifted(gamma):.3f}, "
          f"giant within 10 nodes {threshold_t3(gamma, 10):.3f}")

b = cut_union_bound(100, 3, 0, 1)
print(f"P[3-out graph on 100 nodes disconnected] <= {b.total:.3e}")
for r, term in b.per_r_terms[:4]:
    print(f"  cuts of size {r}: {term:.3e}")

for k in (4, 5, 6):
    print(f"n=60, r=2, K={k}: non-robustness union bound {robustness_union_bound(60, k, 2).total:.3e}")
