"""Connected components, giant-component size and exhaustive cut search."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .errors import CapacityError, ParameterError
from .graph import UGraph

__all__ = [
    "ComponentLabeling",
    "CutReport",
    "UnionFind",
    "connected_components",
    "is_connected",
    "largest_component_size",
    "nodes_outside_giant",
    "enumerate_cuts",
    "verify_giant_lemma",
    "CUT_ENUMERATION_MAX_N",
]

CUT_ENUMERATION_MAX_N = 20


@dataclass(frozen=True, eq=False)
class ComponentLabeling:
    """``component_of[i]`` is the id of node i's component; ids are 0..c-1."""

    component_of: np.ndarray
    sizes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.sizes.size)

    @property
    def largest_size(self) -> int:
        return int(self.sizes.max()) if self.sizes.size else 0

    def members(self, cid: int) -> np.ndarray:
        return np.flatnonzero(self.component_of == cid)


class UnionFind:
    """Disjoint sets with union by size and path compression."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def _dense_labels(roots) -> np.ndarray:
    # relabel so component ids appear in order of their smallest node
    _, first, inverse = np.unique(np.asarray(roots), return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse]


def connected_components(g: UGraph, method: str = "csgraph") -> ComponentLabeling:
    """Label connected components.

    ``method="csgraph"`` uses scipy's compiled traversal and is the one the
    experiment harness uses; ``"union-find"`` runs :class:`UnionFind` over
    the edge list. Both return ids ordered by each component's smallest node.
    """
    if method == "csgraph":
        if g.n == 0:
            labels = np.empty(0, dtype=np.int64)
        else:
            mat = csr_matrix((np.ones(g.indices.size, dtype=np.int8), g.indices, g.indptr),
                             shape=(g.n, g.n))
            _, raw = _cc(mat, directed=False)
            labels = _dense_labels(raw)
    elif method == "union-find":
        uf = UnionFind(g.n)
        for u, v in g.edges().tolist():
            uf.union(u, v)
        labels = _dense_labels([uf.find(i) for i in range(g.n)]) if g.n else np.empty(0, np.int64)
    else:
        raise ParameterError(f"unknown method {method!r}")
    sizes = np.bincount(labels) if labels.size else np.empty(0, dtype=np.int64)
    return ComponentLabeling(labels, sizes)


def _require_nonempty(g: UGraph) -> None:
    if g.n == 0:
        raise ParameterError("graph has no nodes")


def largest_component_size(g: UGraph) -> int:
    _require_nonempty(g)
    return connected_components(g).largest_size


def nodes_outside_giant(g: UGraph) -> int:
    """Number of nodes not in a largest component (ties share the size)."""
    return g.n - largest_component_size(g)


def is_connected(g: UGraph) -> bool:
    return nodes_outside_giant(g) == 0


@dataclass(frozen=True)
class CutReport:
    cuts: tuple[frozenset[int], ...]
    size_range: tuple[int, int]


def _check_cut_capacity(g: UGraph) -> None:
    if g.n > CUT_ENUMERATION_MAX_N:
        raise CapacityError(f"cut enumeration is limited to n <= {CUT_ENUMERATION_MAX_N}, got {g.n}")


def _closed_masks(g: UGraph) -> np.ndarray:
    """Boolean array over all 2^n subsets: True where no edge leaves the subset."""
    n = g.n
    masks = np.arange(1 << n, dtype=np.int64)
    closed = np.ones(masks.size, dtype=bool)
    for i, adj in enumerate(g.adjacency_masks()):
        inside = (masks >> i) & 1 == 1
        closed &= ~inside | ((adj & ~masks) == 0)
    return closed


def enumerate_cuts(g: UGraph, min_size: int = 1, max_size: int | None = None) -> CutReport:
    """All node subsets S with ``min_size <= |S| <= max_size`` and no edge to S^c.

    The empty set and the full node set are never reported. Exhaustive over
    2^n subsets, so n is capped at 20.
    """
    _check_cut_capacity(g)
    n = g.n
    if max_size is None:
        max_size = n - 1
    if min_size < 1 or max_size > n - 1:
        raise ParameterError(f"size range must lie within [1, n-1], got [{min_size}, {max_size}]")
    if n < 2 or min_size > max_size:
        return CutReport((), (min_size, max_size))
    closed = _closed_masks(g)
    masks = np.arange(1 << n, dtype=np.int64)
    size = np.bitwise_count(masks)
    hit = np.flatnonzero(closed & (size >= min_size) & (size <= max_size))
    cuts = tuple(frozenset(j for j in range(n) if (int(m) >> j) & 1) for m in hit)
    return CutReport(cuts, (min_size, max_size))


def verify_giant_lemma(g: UGraph, lam: int) -> bool:
    """Check, on one survivor graph, that a cut-free middle range forces a giant.

    With ``N = g.n`` surviving nodes and ``1 <= lam <= N // 3``: if no cut
    has size in ``[lam, N - lam]`` then the largest component has more than
    ``N - lam`` nodes. Returns whether the implication holds (it always
    should; False signals a bug).
    """
    _check_cut_capacity(g)
    n = g.n
    if not 1 <= lam <= n // 3:
        raise ParameterError(f"lam must satisfy 1 <= lam <= n//3, got {lam} (n={n})")
    has_cut = bool(enumerate_cuts(g, lam, n - lam).cuts)
    if has_cut:
        return True
    return largest_component_size(g) > n - lam
