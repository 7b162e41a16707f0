"""Finite-n union bounds on disconnection and on non-robustness.

These are the instance-evaluable sums the asymptotic arguments start from;
they can exceed 1 and are then uninformative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError, UnsupportedParameterError
from .special import log_comb, reg_inc_beta

__all__ = [
    "BoundBreakdown",
    "cut_union_bound",
    "robustness_term_bound",
    "robustness_union_bound",
    "poisson_binomial_mean",
]


@dataclass(frozen=True)
class BoundBreakdown:
    total: float
    per_r_terms: tuple[tuple[int, float], ...]

    @property
    def capped(self) -> float:
        return min(1.0, self.total)


def _log_choose_ratio(top: np.ndarray, bottom: int, k: int) -> np.ndarray:
    # log[C(top, k) / C(bottom, k)] as sum_i log((top-i)/(bottom-i)); -inf if top < k
    out = np.zeros(top.shape, dtype=np.float64)
    valid = top >= k
    t = top[valid].astype(np.float64)
    acc = np.zeros(t.shape, dtype=np.float64)
    for i in range(k):
        acc += np.log((t - i) / (bottom - i))
    out[valid] = acc
    out[~valid] = -np.inf
    return out


def cut_union_bound(n: int, k: int, gamma: int, lam: int) -> BoundBreakdown:
    """Union bound on a cut of size in ``[lam, floor((n-gamma)/2)]`` after deleting gamma nodes.

    Term r is

        C(n-gamma, r) [C(gamma+r-1, k)/C(n-1, k)]^r [C(n-r-1, k)/C(n-1, k)]^(n-gamma-r):

    the number of r-subsets of survivors times the chance that the subset
    picks only among itself and the deleted nodes while the other survivors
    avoid it. Evaluated in log space; C(a, b) = 0 for a < b.
    """
    n, k, gamma, lam = int(n), int(k), int(gamma), int(lam)
    if not 1 <= k < n:
        raise ParameterError(f"need 1 <= k < n, got k={k}, n={n}")
    if not 0 <= gamma < n:
        raise ParameterError(f"need 0 <= gamma < n, got gamma={gamma}")
    m = n - gamma
    r_max = m // 2
    if not 1 <= lam <= r_max:
        raise ParameterError(f"lambda must lie in [1, {r_max}], got {lam}")
    r = np.arange(lam, r_max + 1, dtype=np.int64)
    # log C(m, r) by cumulative sums of log((m-j+1)/j)
    j = np.arange(1, r_max + 1, dtype=np.float64)
    log_c = np.concatenate([[0.0], np.cumsum(np.log((m - j + 1) / j))])[r]
    inner = _log_choose_ratio(gamma + r - 1, n - 1, k)
    outer = _log_choose_ratio(n - r - 1, n - 1, k)
    with np.errstate(invalid="ignore"):
        log_terms = log_c + r * inner + (m - r) * outer
    log_terms = np.where(np.isneginf(inner) | np.isneginf(outer), -np.inf, log_terms)
    with np.errstate(over="ignore"):
        terms = np.exp(log_terms)
    total = math.fsum(terms.tolist())
    return BoundBreakdown(total, tuple(zip(r.tolist(), terms.tolist())))


def robustness_term_bound(n: int, m: int, k: int, r: int) -> float:
    """Bound on the expected number of non-r-reachable m-subsets of H(n; k).

        C(n, m) * (1/2 * I_{(m-1)/(n-r)}(k - r + 1, r))^m

    The factor 1/2 per node needs k >= 2r - 1.
    """
    n, m, k, r = int(n), int(m), int(k), int(r)
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if not 1 <= k < n:
        raise ParameterError(f"need 1 <= k < n, got k={k}, n={n}")
    if not 1 <= m <= n // 2:
        raise ParameterError(f"m must lie in [1, {n // 2}], got {m}")
    if k < 2 * r - 1:
        raise UnsupportedParameterError(f"bound requires k >= 2r - 1, got k={k}, r={r}")
    x = (m - 1) / (n - r)
    inc = reg_inc_beta(x, k - r + 1, r)
    if inc == 0.0:
        return 0.0
    return math.exp(log_comb(n, m) + m * (math.log(0.5) + math.log(inc)))


def robustness_union_bound(n: int, k: int, r: int) -> BoundBreakdown:
    """Sum of :func:`robustness_term_bound` over m = 1..floor(n/2)."""
    terms = [(m, robustness_term_bound(n, m, k, r)) for m in range(1, n // 2 + 1)]
    return BoundBreakdown(math.fsum(t for _, t in terms), tuple(terms))


def poisson_binomial_mean(n: int, m: int, k: int, a: int, r: int) -> float:
    """Mean count of subset-complement nodes picking the next subset node.

    ((n - m) k - a (r - 1)) / (n - a - 1), after a earlier nodes each took
    exactly r - 1 picks.
    """
    if not (1 <= a <= m - 1 and m - 1 <= n / 2):
        raise ParameterError(f"need 1 <= a <= m-1 <= n/2, got a={a}, m={m}, n={n}")
    if n - a - 1 == 0:
        raise ParameterError("n - a - 1 is zero")
    return ((n - m) * k - a * (r - 1)) / (n - a - 1)
