"""
Connectivity after deleting half the nodes
==========================================

Sample 5000-node K-out graphs, delete 2500 nodes at random, and watch the
probability that the survivors stay connected climb from 0 to 1 as K grows.
The closed-form threshold sits in the middle of the climb.
"""

from koutgraph.montecarlo import ExperimentConfig, run_connectivity_sweep
from koutgraph.numerics import threshold_t1

n, alpha = 5000, 0.5
print(f"threshold log n / (1 - alpha - log alpha) = {threshold_t1(alpha, n):.3f}")

# 200 trials per K keeps this under a minute; the acceptance run uses 1000
cfg = ExperimentConfig("connectivity", n=n, k_range=(1, 12), trials=200, master_seed=1,
                       alpha=alpha)
print(" K  P(connected)   95% CI")
for row in run_connectivity_sweep(cfg):
    print(f"{row.k:2d}  {row.p_connected_hat:12.3f}   [{row.ci_low:.3f}, {row.ci_high:.3f}]")
