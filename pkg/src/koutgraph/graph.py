"""Random K-out and Erdos-Renyi graphs, node deletion and basic statistics.

Graphs are stored in CSR form (``indptr``/``indices``) with each neighbor
list sorted. Node ids are 0-based. A graph is never mutated after
construction; deletion returns a new, relabelled graph together with the
map back to the original ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ParameterError
from .rng import make_rng

__all__ = [
    "UGraph",
    "SelectionTable",
    "DeletionRecord",
    "GraphStats",
    "generate_kout",
    "selection_table",
    "kout_from_selections",
    "matched_er_probability",
    "generate_er",
    "delete_random_nodes",
    "delete_bernoulli",
    "delete_nodes",
    "graph_stats",
]

# Above this many selections per node the column-wise rejection sampler
# does O(n k^2) comparisons; switch to a per-row shuffle instead.
_SPARSE_K_MAX = 64
_DENSE_CHUNK_ROWS = 512


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UGraph:
    """Undirected simple graph on nodes ``0..n-1``.

    Attributes
    ----------
    n : int
        Number of nodes.
    indptr : ndarray, shape (n+1,)
        CSR row pointers; neighbors of ``i`` are ``indices[indptr[i]:indptr[i+1]]``.
    indices : ndarray, shape (2*edge_count,)
        Concatenated sorted neighbor lists.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges, *, dedupe: bool = True) -> "UGraph":
        """Build from an iterable/array of ``(u, v)`` pairs.

        With ``dedupe`` (default) repeated pairs in either orientation are
        merged; otherwise duplicates raise. Self-loops always raise.
        """
        n = int(n)
        if n < 0:
            raise ParameterError(f"n must be >= 0, got {n}")
        e = np.asarray(edges, dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ParameterError("edges must have shape (m, 2)")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ParameterError("edge endpoint out of range")
        if np.any(e[:, 0] == e[:, 1]):
            raise ParameterError("self-loops are not allowed")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        keys = lo * n + hi
        uniq = np.unique(keys)
        if not dedupe and uniq.size != keys.size:
            raise ParameterError("duplicate edge")
        return cls._from_unique_keys(n, uniq)

    @classmethod
    def _from_unique_keys(cls, n: int, keys: np.ndarray) -> "UGraph":
        # keys = u*n + v with u < v, already unique
        u = keys // n if n else keys
        v = keys % n if n else keys
        directed = np.sort(np.concatenate([keys, v * n + u]))
        src = directed // n if n else directed
        dst = directed % n if n else directed
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, _frozen(indptr), _frozen(dst.astype(np.int64)))

    @classmethod
    def empty(cls, n: int) -> "UGraph":
        return cls.from_edges(n, np.empty((0, 2), dtype=np.int64))

    @classmethod
    def complete(cls, n: int) -> "UGraph":
        iu = np.triu_indices(n, k=1)
        return cls.from_edges(n, np.column_stack(iu))

    @property
    def edge_count(self) -> int:
        return int(self.indices.size // 2)

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(i).tolist() for i in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        pos = np.searchsorted(nb, v)
        return bool(pos < nb.size and nb[pos] == v)

    def edges(self) -> np.ndarray:
        """Edges as an ``(m, 2)`` array with ``u < v``, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self.indices
        return np.column_stack([src[mask], self.indices[mask]])

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as integer bitmasks (bit j set iff j is a neighbor)."""
        masks = []
        for i in range(self.n):
            m = 0
            for j in self.neighbors(i).tolist():
                m |= 1 << j
            masks.append(m)
        return masks

    def with_edge(self, u: int, v: int) -> "UGraph":
        return UGraph.from_edges(self.n, np.vstack([self.edges(), [[u, v]]]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    __hash__ = None

    def __repr__(self) -> str:
        return f"UGraph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True, eq=False)
class SelectionTable:
    """Per-node choices: row ``i`` holds the ``k`` labels picked by node ``i``.

    Columns are in draw order. For the column-wise sampler the first ``j``
    columns of a ``k``-table drawn from a given seed equal the ``j``-table
    drawn from the same seed, which is what coupled sweeps rely on.
    """

    n: int
    k: int
    choices: np.ndarray

    def choice_set(self, i: int) -> frozenset[int]:
        return frozenset(self.choices[i].tolist())

    def truncated(self, k: int) -> "SelectionTable":
        if not 1 <= k <= self.k:
            raise ParameterError(f"cannot truncate {self.k} columns to {k}")
        return SelectionTable(self.n, k, _frozen(self.choices[:, :k].copy()))

    def validate(self) -> None:
        c = self.choices
        if c.shape != (self.n, self.k):
            raise ParameterError("choices shape does not match (n, k)")
        if c.size and (c.min() < 0 or c.max() >= self.n):
            raise ParameterError("choice label out of range")
        if np.any(c == np.arange(self.n)[:, None]):
            raise ParameterError("a node selected itself")
        s = np.sort(c, axis=1)
        if np.any(s[:, 1:] == s[:, :-1]):
            raise ParameterError("repeated label within a choice set")


def _check_kout_params(n: int, k: int) -> None:
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise ParameterError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")


def _sample_sparse(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    # Column c is drawn uniformly from the n-1 admissible offsets and
    # redrawn per row until it differs from columns < c. Each row is then a
    # uniformly random ordered k-sample without replacement.
    m = n - 1
    out = np.empty((n, k), dtype=np.int64)
    for c in range(k):
        col = rng.integers(0, m, size=n)
        if c:
            bad = np.flatnonzero((out[:, :c] == col[:, None]).any(axis=1))
            while bad.size:
                col[bad] = rng.integers(0, m, size=bad.size)
                still = (out[bad, :c] == col[bad, None]).any(axis=1)
                bad = bad[still]
        out[:, c] = col
    return out


def _sample_dense(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    # Independent Fisher-Yates shuffle of 0..n-2 for every row, keep a prefix.
    m = n - 1
    out = np.empty((n, k), dtype=np.int64)
    base = np.arange(m, dtype=np.int64)
    for start in range(0, n, _DENSE_CHUNK_ROWS):
        stop = min(n, start + _DENSE_CHUNK_ROWS)
        block = rng.permuted(np.broadcast_to(base, (stop - start, m)).copy(), axis=1)
        out[start:stop] = block[:, :k]
    return out


def selection_table(n: int, k: int, seed) -> SelectionTable:
    """Draw the choice sets of a random K-out graph.

    Each node picks ``k`` distinct labels other than itself, uniformly and
    independently of every other node.
    """
    n, k = int(n), int(k)
    _check_kout_params(n, k)
    rng = make_rng(seed)
    if k <= _SPARSE_K_MAX and 2 * k <= n - 1:
        offsets = _sample_sparse(rng, n, k)
    else:
        offsets = _sample_dense(rng, n, k)
    # offsets live in 0..n-2; skip over the node's own label
    rows = np.arange(n, dtype=np.int64)[:, None]
    labels = offsets + (offsets >= rows)
    return SelectionTable(n, k, _frozen(labels))


def kout_from_selections(table: SelectionTable) -> UGraph:
    """Symmetrize a selection table: i ~ j iff i picked j or j picked i."""
    n = table.n
    src = np.repeat(np.arange(n, dtype=np.int64), table.k)
    dst = table.choices.reshape(-1)
    lo = np.minimum(src, dst)
    hi = np.maximum(src, dst)
    return UGraph._from_unique_keys(n, np.unique(lo * n + hi))


def generate_kout(n: int, k: int, seed) -> tuple[UGraph, SelectionTable]:
    """Sample a random K-out graph H(n; k).

    Returns the graph and the selection table it was built from.
    """
    table = selection_table(n, k, seed)
    return kout_from_selections(table), table


def matched_er_probability(n: int, k: int) -> float:
    """Edge probability giving an ER graph the K-out mean degree, ``min(1, 2k/n)``."""
    if n < 2 or k < 1:
        raise ParameterError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return min(1.0, 2.0 * k / n)


def _decode_pairs(idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # pair index t enumerates (u, v), u < v, ordered by v then u:
    # t = v(v-1)/2 + u
    v = np.floor((1.0 + np.sqrt(1.0 + 8.0 * idx.astype(np.float64))) / 2.0).astype(np.int64)
    # correct float rounding in either direction
    v -= (v * (v - 1) // 2) > idx
    v += ((v + 1) * v // 2) <= idx
    u = idx - v * (v - 1) // 2
    return u, v


def generate_er(n: int, p: float, seed) -> UGraph:
    """Sample G(n, p): each of the n(n-1)/2 pairs is an edge independently.

    The edge count is drawn from Binomial(N, p) and that many distinct pairs
    are then chosen uniformly, which has the same law as independent coins.
    """
    n = int(n)
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    total = n * (n - 1) // 2
    if total == 0:
        return UGraph.empty(n)
    m = int(rng.binomial(total, p))
    if m == total:
        idx = np.arange(total, dtype=np.int64)
    else:
        idx = np.sort(rng.choice(total, size=m, replace=False)).astype(np.int64)
    u, v = _decode_pairs(idx)
    return UGraph._from_unique_keys(n, np.sort(u * n + v))


@dataclass(frozen=True, eq=False)
class DeletionRecord:
    """Outcome of removing nodes from a graph.

    ``survivors[c]`` is the original id of compact node ``c``.
    """

    n_original: int
    deleted: np.ndarray
    survivors: np.ndarray

    @property
    def gamma(self) -> int:
        return int(self.deleted.size)

    @property
    def survivor_map(self) -> dict[int, int]:
        """Original id -> compact id."""
        return {int(o): c for c, o in enumerate(self.survivors.tolist())}

    def original_id(self, compact: int) -> int:
        return int(self.survivors[compact])


def delete_nodes(g: UGraph, deleted: Iterable[int]) -> tuple[UGraph, DeletionRecord]:
    """Induced subgraph on the complement of ``deleted``, compactly relabelled."""
    dead = np.unique(np.asarray(list(deleted) if not isinstance(deleted, np.ndarray)
                                else deleted, dtype=np.int64))
    if dead.size and (dead[0] < 0 or dead[-1] >= g.n):
        raise ParameterError("deleted node id out of range")
    alive = np.ones(g.n, dtype=bool)
    alive[dead] = False
    survivors = np.flatnonzero(alive).astype(np.int64)
    new_id = np.full(g.n, -1, dtype=np.int64)
    new_id[survivors] = np.arange(survivors.size, dtype=np.int64)
    e = g.edges()
    keep = alive[e[:, 0]] & alive[e[:, 1]]
    e = new_id[e[keep]]
    m = survivors.size
    # relabelling is monotone, so u < v and lexicographic order are preserved
    sub = UGraph._from_unique_keys(m, e[:, 0] * m + e[:, 1])
    return sub, DeletionRecord(g.n, _frozen(dead), _frozen(survivors))


def delete_random_nodes(g: UGraph, gamma: int, seed) -> tuple[UGraph, DeletionRecord]:
    """Delete a uniformly random ``gamma``-subset of the nodes."""
    gamma = int(gamma)
    if not 0 <= gamma < g.n:
        raise ParameterError(f"gamma must satisfy 0 <= gamma < n, got {gamma} (n={g.n})")
    rng = make_rng(seed)
    dead = rng.choice(g.n, size=gamma, replace=False) if gamma else np.empty(0, np.int64)
    return delete_nodes(g, dead)


def delete_bernoulli(g: UGraph, alpha: float, seed) -> tuple[UGraph, DeletionRecord]:
    """Delete every node independently with probability ``alpha``.

    At least one node is always kept; an all-deleted draw is resampled.
    """
    if not 0.0 <= alpha < 1.0:
        raise ParameterError(f"alpha must lie in [0, 1), got {alpha}")
    rng = make_rng(seed)
    while True:
        dead_mask = rng.random(g.n) < alpha
        if g.n == 0 or not dead_mask.all():
            break
    return delete_nodes(g, np.flatnonzero(dead_mask))


@dataclass(frozen=True)
class GraphStats:
    n: int
    edge_count: int
    min_degree: int
    max_degree: int
    mean_degree: float


def graph_stats(g: UGraph) -> GraphStats:
    deg = g.degrees
    if g.n == 0:
        return GraphStats(0, 0, 0, 0, 0.0)
    return GraphStats(g.n, g.edge_count, int(deg.min()), int(deg.max()),
                      2.0 * g.edge_count / g.n)
