"""
How many nodes fall outside the giant component
===============================================

Delete 40% of a 5000-node K-out graph. For each K the inverted giant-component
bound says how many survivors may be cut off; the sweep reports the worst case
actually seen.
"""

from koutgraph.montecarlo import ExperimentConfig, run_giant_sweep
from koutgraph.numerics import invert_t4, threshold_t4

n, alpha = 5000, 0.4
print(f"K needed to keep all but n/10 nodes: {threshold_t4(alpha, n // 10, n):.3f}")

cfg = ExperimentConfig("giant", n=n, k_range=(4, 14), trials=200, master_seed=2, alpha=alpha)
print(" K  allowed  worst seen  mean outside")
for row in run_giant_sweep(cfg):
    lam = invert_t4(alpha, n, row.k)
    allowed = "-" if lam is None else str(lam)
    print(f"{row.k:2d}  {allowed:>7}  {row.max_outside:10d}  {row.mean_outside:12.4f}")
