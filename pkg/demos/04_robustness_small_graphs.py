"""
r-robustness on graphs small enough to check exactly
====================================================

Robustness is co-NP-complete to decide, so the checker enumerates subsets and
stops at 16 nodes. That is still enough to see the ordering
r-robust => r-connected and to see K = 2r doing its job.
"""

from koutgraph import UGraph, generate_kout, is_r_robust_bruteforce, max_robustness
from koutgraph.montecarlo import ExperimentConfig, run_robustness_sample
from koutgraph.robustness import vertex_connectivity_bruteforce

k4 = UGraph.complete(4)
print("K4: max robustness", max_robustness(k4), "vertex connectivity",
      vertex_connectivity_bruteforce(k4))

# a failing pair of subsets is returned as the certificate
cycle = UGraph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)])
verdict = is_r_robust_bruteforce(cycle, 2)
print("8-cycle 2-robust?", verdict.robust, "witness", verdict.witness_sets())

g, _ = generate_kout(12, 4, seed=7)
print("one 4-out graph on 12 nodes: max robustness", max_robustness(g))

cfg = ExperimentConfig("robust_sample", n=12, k_range=(1, 5), trials=100, master_seed=4, r=2)
print(" K  2-robust  2-connected")
for row in run_robustness_sample(cfg):
    print(f"{row.k:2d}  {row.fraction_r_robust:8.2f}  {row.fraction_r_connected:11.2f}")
