"""Threshold formulas, beta-function numerics and finite-n bounds."""
from .bounds import (BoundBreakdown, cut_union_bound, poisson_binomial_mean,
                     robustness_term_bound, robustness_union_bound)
from .special import (AlphaStar, beta, binomial_cdf, log_beta, log_comb, reg_inc_beta,
                      solve_alpha_star)
from .thresholds import (TheoremTag, ThresholdQuery, ThresholdResult, evaluate_threshold,
                         invert_t4, t4_lambda_max, threshold_robust, threshold_t1,
                         threshold_t2a, threshold_t2b, threshold_t2b_shifted, threshold_t3,
                         threshold_t4)

__all__ = [
    "AlphaStar", "BoundBreakdown", "TheoremTag", "ThresholdQuery", "ThresholdResult",
    "beta", "binomial_cdf", "cut_union_bound", "evaluate_threshold", "invert_t4",
    "log_beta", "log_comb", "poisson_binomial_mean", "reg_inc_beta",
    "robustness_term_bound", "robustness_union_bound", "solve_alpha_star",
    "t4_lambda_max", "threshold_robust", "threshold_t1", "threshold_t2a", "threshold_t2b",
    "threshold_t2b_shifted", "threshold_t3", "threshold_t4",
]
