"""Closed-form minimum-K thresholds for connectivity, giant component and robustness.

All logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from ..errors import ParameterError

__all__ = [
    "TheoremTag",
    "ThresholdQuery",
    "ThresholdResult",
    "threshold_t1",
    "threshold_t2a",
    "threshold_t2b",
    "threshold_t2b_shifted",
    "threshold_t3",
    "threshold_t4",
    "t4_lambda_max",
    "invert_t4",
    "threshold_robust",
    "evaluate_threshold",
]

_LOG2_HALF = math.log(2.0) + 0.5


class TheoremTag(str, Enum):
    T1 = "t1"
    T2A = "t2a"
    T2B = "t2b"
    T3 = "t3"
    T4 = "t4"
    ROBUST = "robust"


def _open_unit(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")


def threshold_t1(alpha: float, n: int) -> float:
    """Connectivity after deleting a fraction alpha: log n / (1 - alpha - log alpha)."""
    _open_unit(alpha)
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    return math.log(n) / (1.0 - alpha - math.log(alpha))


def threshold_t2a() -> int:
    """Connectivity after o(sqrt n) deletions needs only K >= 2."""
    return 2


def threshold_t2b(gamma: int) -> float:
    """Connectivity after gamma = o(n) deletions: log gamma / (log 2 + 1/2)."""
    if gamma < 2:
        raise ParameterError(f"gamma must be >= 2, got {gamma}")
    return math.log(gamma) / _LOG2_HALF


def threshold_t2b_shifted(gamma: int) -> float:
    """``1 + threshold_t2b(gamma)``; matches the r_2 values quoted alongside the simulations."""
    return 1.0 + threshold_t2b(gamma)


def threshold_t3(gamma: int, lam: int) -> float:
    """Giant component missing < lam nodes, gamma = o(n): 1 + log(1 + gamma/lam)/(log 2 + 1/2)."""
    if gamma < 0:
        raise ParameterError(f"gamma must be >= 0, got {gamma}")
    if lam < 1:
        raise ParameterError(f"lambda must be >= 1, got {lam}")
    return 1.0 + math.log1p(gamma / lam) / _LOG2_HALF


def t4_lambda_max(alpha: float, n: int) -> int:
    return math.floor((1.0 - alpha) * n / 3.0)


def threshold_t4(alpha: float, lam: float, n: int, check_range: bool = True) -> float:
    """Giant component missing < lam nodes after deleting alpha*n nodes.

        1 + [log(1 + alpha n / lam) + alpha + log(1 - alpha)]
            / [(1 - alpha)/2 - log((1 + alpha)/2)]

    With ``check_range`` (default) lam must be an integer count in
    ``[1, floor((1 - alpha) n / 3)]``; turning it off evaluates the
    expression for any positive lam.
    """
    _open_unit(alpha)
    if lam <= 0:
        raise ParameterError(f"lambda must be positive, got {lam}")
    if check_range:
        hi = t4_lambda_max(alpha, n)
        if not 1 <= lam <= hi:
            raise ParameterError(f"lambda must lie in [1, {hi}], got {lam}")
    num = math.log1p(alpha * n / lam) + alpha + math.log1p(-alpha)
    den = (1.0 - alpha) / 2.0 - math.log((1.0 + alpha) / 2.0)
    return 1.0 + num / den


def invert_t4(alpha: float, n: int, k: float) -> int | None:
    """Smallest lam in ``[1, floor((1-alpha) n/3)]`` with ``threshold_t4 <= k``.

    ``threshold_t4`` decreases in lam, so this is a binary search. Returns
    None when even the largest admissible lam needs more than k.
    """
    _open_unit(alpha)
    lo, hi = 1, t4_lambda_max(alpha, n)
    if hi < 1 or threshold_t4(alpha, hi, n) > k:
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if threshold_t4(alpha, mid, n) <= k:
            hi = mid
        else:
            lo = mid + 1
    return lo


def threshold_robust(r: int) -> int:
    """r-robustness holds whp once K >= 2r."""
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    return 2 * int(r)


@dataclass
class ThresholdQuery:
    n: int | None = None
    alpha: float | None = None
    gamma: int | None = None
    lam: int | None = None
    r: int | None = None

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ParameterError("missing parameter(s): " + ", ".join(missing))


@dataclass
class ThresholdResult:
    value: float
    theorem_tag: TheoremTag
    extras: dict = field(default_factory=dict)


def evaluate_threshold(tag: TheoremTag | str, q: ThresholdQuery) -> ThresholdResult:
    """Dispatch a query to the matching threshold function."""
    tag = TheoremTag(tag)
    if tag is TheoremTag.T1:
        q.require("alpha", "n")
        return ThresholdResult(threshold_t1(q.alpha, q.n), tag)
    if tag is TheoremTag.T2A:
        return ThresholdResult(threshold_t2a(), tag)
    if tag is TheoremTag.T2B:
        q.require("gamma")
        return ThresholdResult(threshold_t2b(q.gamma), tag,
                               {"shifted_value": threshold_t2b_shifted(q.gamma)})
    if tag is TheoremTag.T3:
        q.require("gamma", "lam")
        return ThresholdResult(threshold_t3(q.gamma, q.lam), tag)
    if tag is TheoremTag.T4:
        if q.alpha is None and q.gamma is not None and q.n:
            q.alpha = q.gamma / q.n
        q.require("alpha", "lam", "n")
        return ThresholdResult(threshold_t4(q.alpha, q.lam, q.n), tag)
    q.require("r")
    return ThresholdResult(threshold_robust(q.r), tag)
