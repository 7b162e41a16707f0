"""Exact r-reachability, r-robustness and vertex connectivity for small graphs.

Subsets of nodes are integer bitmasks: bit ``j`` is set iff node ``j`` is in
the set. Deciding r-robustness is co-NP-complete, so everything here is
exhaustive and refuses graphs with more than 16 nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import CapacityError, ParameterError
from .graph import UGraph

__all__ = [
    "ROBUSTNESS_MAX_N",
    "RobustnessVerdict",
    "mask_of",
    "nodes_of",
    "is_r_reachable",
    "is_r_robust_bruteforce",
    "max_robustness",
    "vertex_connectivity_bruteforce",
    "is_r_connected",
]

ROBUSTNESS_MAX_N = 16


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for j in nodes:
        m |= 1 << int(j)
    return m


def nodes_of(mask: int) -> frozenset[int]:
    return frozenset(j for j in range(mask.bit_length()) if (mask >> j) & 1)


@dataclass(frozen=True)
class RobustnessVerdict:
    """Result of an r-robustness check.

    When ``robust`` is False, ``witness`` holds two disjoint, nonempty masks
    neither of which is r-reachable; it is the smallest such pair ordered
    by (first mask, second mask) with ``first < second``.
    """

    r: int
    robust: bool
    witness: tuple[int, int] | None = None

    def witness_sets(self) -> tuple[frozenset[int], frozenset[int]] | None:
        if self.witness is None:
            return None
        return nodes_of(self.witness[0]), nodes_of(self.witness[1])


def _check_capacity(g: UGraph) -> None:
    if g.n > ROBUSTNESS_MAX_N:
        raise CapacityError(f"exhaustive robustness checks are limited to n <= "
                            f"{ROBUSTNESS_MAX_N}, got {g.n}")


def _as_mask(subset, n: int) -> int:
    m = int(subset) if isinstance(subset, (int, np.integer)) else mask_of(subset)
    if m >> n:
        raise ParameterError("subset contains a node outside the graph")
    return m


def _reachable_mask(adj: list[int], s: int, r: int) -> bool:
    rest = ~s
    x = s
    while x:
        low = x & -x
        i = low.bit_length() - 1
        if (adj[i] & rest).bit_count() >= r:
            return True
        x ^= low
    return False


def is_r_reachable(g: UGraph, subset, r: int) -> bool:
    """True iff some node of ``subset`` has at least ``r`` neighbors outside it.

    ``subset`` may be a bitmask or an iterable of node ids. Neighbors are
    counted over the whole vertex set.
    """
    s = _as_mask(subset, g.n)
    if s == 0:
        raise ParameterError("subset must be nonempty")
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    return _reachable_mask(g.adjacency_masks(), s, r)


def _unreachable_table(g: UGraph, r: int) -> np.ndarray:
    # bad[S] is True iff S is nonempty and every i in S has < r neighbors outside S
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    full = (1 << n) - 1
    bad = masks != 0
    for i, adj in enumerate(g.adjacency_masks()):
        inside = (masks >> i) & 1 == 1
        outside_nb = np.bitwise_count(adj & (full ^ masks))
        bad &= ~inside | (outside_nb < r)
    return bad


def _contains_bad_subset(bad: np.ndarray, n: int) -> np.ndarray:
    # sum-over-subsets: out[T] = any(bad[S] for S subset of T)
    out = bad.copy()
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return out


def _robust_sos(g: UGraph, r: int) -> RobustnessVerdict:
    n = g.n
    bad = _unreachable_table(g, r)
    below = _contains_bad_subset(bad, n)
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.int64)
    paired = bad & below[full ^ masks]
    hits = np.flatnonzero(paired)
    if hits.size == 0:
        return RobustnessVerdict(r, True)
    s1 = int(hits[0])
    partners = np.flatnonzero(bad & ((masks & s1) == 0))
    return RobustnessVerdict(r, False, (s1, int(partners[0])))


def _robust_enumerate(g: UGraph, r: int) -> RobustnessVerdict:
    # Every unordered pair of disjoint nonempty subsets, visited once as
    # (s1, s2) with s1 < s2 in increasing lexicographic order.
    n = g.n
    adj = g.adjacency_masks()
    full = (1 << n) - 1
    for s1 in range(1, full + 1):
        if _reachable_mask(adj, s1, r):
            continue
        comp = full ^ s1
        s2 = _next_submask_above(comp, s1)
        while s2:
            if not _reachable_mask(adj, s2, r):
                return RobustnessVerdict(r, False, (s1, s2))
            s2 = (s2 - comp) & comp
    return RobustnessVerdict(r, True)


def _next_submask_above(comp: int, floor: int) -> int:
    # submasks of comp in increasing order start at (0 - comp) & comp
    s = (0 - comp) & comp
    while s and s <= floor:
        s = (s - comp) & comp
    return s


def is_r_robust_bruteforce(g: UGraph, r: int, method: str = "sos") -> RobustnessVerdict:
    """Decide r-robustness exactly.

    ``method="sos"`` tabulates the non-r-reachable subsets and finds a
    disjoint pair with a sum-over-subsets pass (O(n 2^n)). ``"enumerate"``
    walks every disjoint pair directly and stops at the first failing pair.
    Both return the same verdict and witness.
    """
    _check_capacity(g)
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if method == "sos":
        return _robust_sos(g, r)
    if method == "enumerate":
        return _robust_enumerate(g, r)
    raise ParameterError(f"unknown method {method!r}")


def max_robustness(g: UGraph) -> int:
    """Largest r for which ``g`` is r-robust; 0 when ``g`` is disconnected."""
    _check_capacity(g)
    if g.n < 2:
        raise ParameterError("robustness needs at least two nodes")
    r = 0
    # a pair of singletons needs a node of degree >= r, so r <= max degree
    for cand in range(1, int(g.degrees.max()) + 2):
        if not is_r_robust_bruteforce(g, cand).robust:
            break
        r = cand
    return r


def _induced_connected(adj: list[int], alive: int) -> bool:
    if alive == 0:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1] & alive & ~seen
        seen |= nb
        frontier |= nb
    return seen == alive


def vertex_connectivity_bruteforce(g: UGraph) -> int:
    """Fewest nodes whose removal disconnects ``g``.

    Complete graphs get ``n - 1``; a disconnected graph gets 0.
    """
    _check_capacity(g)
    n = g.n
    adj = g.adjacency_masks()
    full = (1 << n) - 1
    if not _induced_connected(adj, full):
        return 0
    for kappa in range(1, n - 1):
        for removed in combinations(range(n), kappa):
            if not _induced_connected(adj, full ^ mask_of(removed)):
                return kappa
    return max(n - 1, 0)


def is_r_connected(g: UGraph, r: int) -> bool:
    return vertex_connectivity_bruteforce(g) >= r
