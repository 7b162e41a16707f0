"""Beta functions with integer parameters and the binomial CDF.

For positive integers a, b the regularized incomplete beta function is a
binomial tail,

    I_x(a, b) = P[Bin(a + b - 1, x) >= a],

so it is evaluated as a finite sum of non-negative terms instead of a
continued fraction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParameterError, UnsupportedParameterError

__all__ = [
    "beta",
    "log_beta",
    "log_comb",
    "reg_inc_beta",
    "binomial_cdf",
    "AlphaStar",
    "solve_alpha_star",
]

# factorials are exact up to here before converting to float
_EXACT_LIMIT = 300
# math.comb(N, j) fits a float for every j when N <= 1020
_DIRECT_TERMS_LIMIT = 1000


def _positive_int(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def log_comb(n: int, k: int) -> float:
    """log C(n, k); ``-inf`` when k > n or k < 0."""
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def beta(a: int, b: int) -> float:
    """B(a, b) = (a-1)! (b-1)! / (a+b-1)! for positive integers."""
    a = _positive_int("a", a)
    b = _positive_int("b", b)
    if a + b <= _EXACT_LIMIT:
        return float(Fraction(math.factorial(a - 1) * math.factorial(b - 1),
                              math.factorial(a + b - 1)))
    return math.exp(log_beta(a, b))


def log_beta(a: int, b: int) -> float:
    a = _positive_int("a", a)
    b = _positive_int("b", b)
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _binomial_term(N: int, j: int, x: float, y: float) -> float:
    # C(N, j) x^j y^(N-j), with y = 1 - x supplied separately
    if N <= _DIRECT_TERMS_LIMIT:
        t = float(math.comb(N, j)) * (x ** j) * (y ** (N - j))
        if t != 0.0 and math.isfinite(t):
            return t
    if x == 0.0 and j > 0 or y == 0.0 and j < N:
        return 0.0
    logt = log_comb(N, j)
    if j:
        logt += j * math.log(x)
    if N - j:
        logt += (N - j) * math.log(y)
    return math.exp(logt)


def reg_inc_beta(x: float, a: int, b: int, complement: float | None = None) -> float:
    """Regularized incomplete beta I_x(a, b) for positive integer a, b.

    ``complement`` may pass ``1 - x`` when it is known more accurately than
    the rounded subtraction (the binomial CDF uses this).
    """
    a = _positive_int("a", a)
    b = _positive_int("b", b)
    if not 0.0 <= x <= 1.0 or math.isnan(x):
        raise ParameterError(f"x must lie in [0, 1], got {x}")
    y = 1.0 - x if complement is None else float(complement)
    if x == 0.0:
        return 0.0
    if y == 0.0:
        return 1.0
    N = a + b - 1
    total = math.fsum(_binomial_term(N, j, x, y) for j in range(a, N + 1))
    return min(1.0, total)


def binomial_cdf(a: int, n: int, p: float) -> float:
    """P[Bin(n, p) <= a], evaluated as I_{1-p}(n - a, a + 1)."""
    if int(a) != a or int(n) != n:
        raise ParameterError("a and n must be integers")
    a, n = int(a), int(n)
    if not 0 <= a <= n:
        raise ParameterError(f"need 0 <= a <= n, got a={a}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    if a == n:
        return 1.0
    return reg_inc_beta(1.0 - p, n - a, a + 1, complement=p)


@dataclass(frozen=True)
class AlphaStar:
    """Root of I_alpha(r, r) = c * alpha on (0, 1/2]."""

    r: int
    c: float
    alpha_star: float

    @property
    def residual(self) -> float:
        return reg_inc_beta(self.alpha_star, self.r, self.r) - self.c * self.alpha_star


def solve_alpha_star(r: int, c: float, tol: float = 1e-13) -> AlphaStar:
    """Solve I_alpha(r, r) = c * alpha for alpha in (0, 1/2] by bisection.

    The root is unique for r >= 2 and 0 < c <= 1, and lies where the
    left side crosses the line from below. With r = 1 the equation reads
    alpha = c * alpha and has no isolated root, so it is rejected.
    """
    r = _positive_int("r", r)
    if r == 1:
        raise UnsupportedParameterError("r = 1 makes I_alpha(1,1) = alpha; no unique root")
    if not 0.0 < c <= 1.0:
        raise ParameterError(f"c must lie in (0, 1], got {c}")

    def f(alpha: float) -> float:
        return reg_inc_beta(alpha, r, r) - c * alpha

    hi = 0.5
    if f(hi) <= 1e-15:
        # c == 1 up to rounding: I_{1/2}(r, r) = 1/2 is the root
        return AlphaStar(r, c, 0.5)
    lo = 0.25
    while f(lo) >= 0.0:
        lo *= 0.5
        if lo < 1e-300:
            raise ParameterError("failed to bracket the root")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return AlphaStar(r, c, 0.5 * (lo + hi))
