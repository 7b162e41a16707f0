from collections import deque
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from koutgraph import (CapacityError, ParameterError, UGraph, UnionFind, connected_components,
                       delete_nodes, delete_random_nodes, enumerate_cuts, generate_er, generate_kout,
                       is_connected, largest_component_size, nodes_outside_giant,
                       selection_table, kout_from_selections, verify_giant_lemma)


def bfs_components(g: UGraph) -> list[set]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = {s}, deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.add(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def as_partition(labels) -> set:
    return {frozenset(np.flatnonzero(labels.component_of == c).tolist())
            for c in range(labels.count)}


def test_triangle_is_connected():
    g = UGraph.complete(3)
    assert largest_component_size(g) == 3
    assert is_connected(g)


def test_two_disjoint_edges():
    g = UGraph.from_edges(4, [(0, 1), (2, 3)])
    lab = connected_components(g)
    assert lab.count == 2
    assert largest_component_size(g) == 2
    assert nodes_outside_giant(g) == 2
    assert not is_connected(g)


def test_labels_are_dense_and_ordered():
    g = UGraph.from_edges(6, [(4, 5), (1, 3)])
    lab = connected_components(g)
    assert lab.component_of.tolist() == [0, 1, 2, 1, 3, 3]
    assert lab.sizes.tolist() == [1, 2, 1, 2]
    assert lab.members(3).tolist() == [4, 5]


def test_empty_graph_rejected():
    g = UGraph.empty(0)
    for fn in (largest_component_size, nodes_outside_giant, is_connected):
        with pytest.raises(ParameterError):
            fn(g)


def test_single_node():
    assert is_connected(UGraph.empty(1))


@pytest.mark.parametrize("method", ["csgraph", "union-find"])
def test_large_kout_matches_bfs(method):
    g, _ = generate_kout(5000, 10, 8)
    h, _ = delete_random_nodes(g, 2000, 9)
    lab = connected_components(h, method=method)
    comps = bfs_components(h)
    assert as_partition(lab) == {frozenset(c) for c in comps}
    assert lab.largest_size == max(map(len, comps))


@settings(max_examples=80, deadline=None)
@given(n=st.integers(1, 60), p=st.floats(0, 0.2), seed=st.integers(0, 2**32))
def test_methods_agree_with_bfs(n, p, seed):
    g = generate_er(n, p, seed)
    expected = {frozenset(c) for c in bfs_components(g)}
    a = connected_components(g)
    b = connected_components(g, method="union-find")
    assert as_partition(a) == expected
    assert np.array_equal(a.component_of, b.component_of)
    assert sorted(a.sizes.tolist()) == sorted(len(c) for c in expected)
    assert a.sizes.sum() == n


def test_unknown_method():
    with pytest.raises(ParameterError):
        connected_components(UGraph.empty(2), method="dfs")


def test_union_find_basics():
    uf = UnionFind(5)
    assert uf.union(0, 1)
    assert uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.find(0) == uf.find(1)
    assert uf.find(2) != uf.find(3)


def test_cuts_of_disjoint_edges():
    g = UGraph.from_edges(4, [(0, 1), (2, 3)])
    rep = enumerate_cuts(g)
    assert set(rep.cuts) == {frozenset({0, 1}), frozenset({2, 3})}
    assert enumerate_cuts(g, 1, 1).cuts == ()


def test_connected_graph_has_no_cuts():
    assert enumerate_cuts(UGraph.complete(6)).cuts == ()


def test_cut_capacity():
    with pytest.raises(CapacityError):
        enumerate_cuts(UGraph.empty(21))


def test_cut_range_validation():
    with pytest.raises(ParameterError):
        enumerate_cuts(UGraph.empty(4), 0, 2)
    with pytest.raises(ParameterError):
        enumerate_cuts(UGraph.empty(4), 1, 4)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 12), p=st.floats(0, 0.5), seed=st.integers(0, 2**32))
def test_cuts_are_unions_of_components(n, p, seed):
    g = generate_er(n, p, seed)
    comps = bfs_components(g)
    expected = set()
    for size in range(1, len(comps) + 1):
        for pick in combinations(comps, size):
            s = frozenset().union(*pick)
            if 0 < len(s) < n:
                expected.add(s)
    assert set(enumerate_cuts(g).cuts) == expected
    assert is_connected(g) == (not expected)


def test_giant_lemma_examples():
    # path on 9 nodes: connected, no cuts at all
    g = UGraph.from_edges(9, [(i, i + 1) for i in range(8)])
    assert verify_giant_lemma(g, 3)
    # isolated node: cut of size 1 lies outside [2, 7], giant is 8 > 9-2
    g = UGraph.from_edges(9, [(i, i + 1) for i in range(7)])
    assert verify_giant_lemma(g, 2)
    with pytest.raises(ParameterError):
        verify_giant_lemma(g, 4)
    with pytest.raises(ParameterError):
        verify_giant_lemma(g, 0)


def test_giant_lemma_on_random_survivor_graphs():
    rng = np.random.default_rng(2718)
    for i in range(1000):
        n = int(rng.integers(6, 15))
        k = int(rng.integers(1, 3))
        gamma = int(rng.integers(0, n - 3))
        g, _ = generate_kout(n, k, int(rng.integers(2**32)))
        h, _ = delete_random_nodes(g, gamma, int(rng.integers(2**32)))
        for lam in range(1, h.n // 3 + 1):
            assert verify_giant_lemma(h, lam), (i, lam)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(3, 40), seed=st.integers(0, 2**32))
def test_adding_edges_never_increases_component_count(n, seed):
    g = generate_er(n, 0.05, seed)
    rng = np.random.default_rng(seed)
    u, v = rng.choice(n, size=2, replace=False)
    if g.has_edge(int(u), int(v)):
        return
    h = g.with_edge(int(u), int(v))
    assert connected_components(h).count <= connected_components(g).count
    assert largest_component_size(h) >= largest_component_size(g)


def test_coupled_kout_outside_is_monotone():
    # a shared selection table makes K-out(k) a subgraph of K-out(k+1)
    for seed in range(30):
        wide = selection_table(300, 6, seed)
        _, rec = delete_random_nodes(UGraph.empty(300), 120, seed + 10_000)
        prev = None
        for k in range(1, 7):
            g = kout_from_selections(wide.truncated(k))
            h, _ = delete_nodes(g, rec.deleted)
            out = nodes_outside_giant(h)
            if prev is not None:
                assert out <= prev
            prev = out
