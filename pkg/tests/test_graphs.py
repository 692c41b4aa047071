import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import ksystems as ks
from ksystems.errors import (
    Disconnected,
    DuplicateEdge,
    EmptySubset,
    FingerprintMismatch,
    InvalidParams,
    KOutOfRange,
    NotAcyclic,
    NotRegular,
    SelfLoop,
)

from conftest import cycle_graph


def test_validate_graph_canonicalizes_edges():
    g = ks.validate_graph(2, 3, [(2, 1), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.edge_index() == {(0, 1): 0, (0, 2): 1, (1, 2): 2}
    assert g.adjacency[0] == (1, 2)


def test_validate_graph_rejects_self_loop():
    with pytest.raises(SelfLoop):
        ks.validate_graph(2, 3, [(0, 0), (1, 2), (0, 2)])


def test_validate_graph_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        ks.validate_graph(2, 3, [(0, 1), (1, 0), (1, 2)])


def test_validate_graph_rejects_wrong_degree():
    with pytest.raises(NotRegular):
        ks.validate_graph(2, 4, [(0, 1), (1, 2), (2, 3)])


def test_validate_graph_rejects_disconnected():
    two_triangles = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    with pytest.raises(Disconnected):
        ks.validate_graph(2, 6, two_triangles)


@pytest.mark.parametrize("d,n", [(0, 1), (2, 0), (-1, 5)])
def test_validate_graph_rejects_bad_parameters(d, n):
    with pytest.raises(InvalidParams):
        ks.validate_graph(d, n, [])


def test_fingerprint_ignores_edge_order(cube3):
    g = cube3.graph
    shuffled = list(g.edges)
    random.Random(7).shuffle(shuffled)
    shuffled = [(v, u) for u, v in shuffled]
    assert ks.graph_fingerprint(g.d, g.n, shuffled) == g.fingerprint


def test_fingerprint_separates_graphs(cube3, simplex3):
    assert cube3.graph.fingerprint != simplex3.graph.fingerprint


def test_make_orientation_checks_length(square):
    with pytest.raises(InvalidParams):
        ks.make_orientation(square, [0, 1])
    with pytest.raises(InvalidParams):
        ks.make_orientation(square, [0, 1, 2, 0])


def test_check_bound_rejects_foreign_orientation(cube3, simplex3):
    o = ks.make_orientation(simplex3.graph, [0] * 6)
    with pytest.raises(FingerprintMismatch):
        ks.check_bound(cube3.graph, o)


def test_directed_edges_heads():
    g = cycle_graph(3)
    o = ks.make_orientation(g, [1, 1, 1])
    # heads bit selects the larger endpoint, so every edge points up
    assert set(ks.directed_edges(g, o)) == {(0, 1), (0, 2), (1, 2)}
    rev = ks.reverse_orientation(o)
    assert set(ks.directed_edges(g, rev)) == {(1, 0), (2, 0), (2, 1)}


def test_topological_order_linear_extension(cube3):
    g = cube3.graph
    o = ks.make_orientation(g, [1] * 12)
    res = ks.topological_order(g, o)
    assert res.cycle is None
    pos = {v: i for i, v in enumerate(res.order)}
    for tail, head in ks.directed_edges(g, o):
        assert pos[tail] < pos[head]
    # Kahn with a min-heap: ties break toward the smaller vertex id
    assert res.order[0] == 0
    assert res.order == (0, 1, 2, 3, 4, 5, 6, 7)


def test_topological_order_cycle_witness(square):
    # 0 -> 1 -> 2 -> 3 -> 0
    heads = [1, 0, 1, 1]
    o = ks.make_orientation(square, heads)
    res = ks.topological_order(square, o)
    assert res.order is None
    cyc = res.cycle
    assert cyc is not None and len(cyc) >= 3
    assert len(set(cyc)) == len(cyc)
    arcs = set(ks.directed_edges(square, o))
    for a, b in zip(cyc, cyc[1:] + (cyc[0],)):
        assert (a, b) in arcs


def _has_cycle_dfs(g, o):
    """Independent check: colour-marking DFS over the out-adjacency."""
    out = ks.out_adjacency(g, o)
    state = [0] * g.n
    for start in range(g.n):
        if state[start]:
            continue
        stack = [(start, iter(out[start]))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if state[w] == 1:
                    return True
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(out[w])))
                    break
            else:
                state[v] = 2
                stack.pop()
    return False


def test_is_acyclic_agrees_with_dfs(cube3):
    g = cube3.graph
    rng = random.Random(2024)
    for _ in range(200):
        o = ks.make_orientation(g, [rng.randint(0, 1) for _ in g.edges])
        assert ks.is_acyclic(g, o) == (not _has_cycle_dfs(g, o))


def test_indegree_histogram_matches_direct_count(cube3):
    g = cube3.graph
    rng = random.Random(5)
    for _ in range(50):
        o = ks.make_orientation(g, [rng.randint(0, 1) for _ in g.edges])
        h = ks.indegree_histogram(g, o)
        indeg = [0] * g.n
        for _, head in ks.directed_edges(g, o):
            indeg[head] += 1
        for i, c in enumerate(h.counts):
            assert c == indeg.count(i)


@given(bits=st.lists(st.integers(0, 1), min_size=12, max_size=12))
@settings(max_examples=60, deadline=None)
def test_histogram_identities(bits):
    g = ks.cube(3).graph
    o = ks.make_orientation(g, bits)
    h = ks.indegree_histogram(g, o)
    assert sum(h.counts) == g.n
    assert ks.hk_sum(h, 0) == g.n
    assert ks.hk_sum(h, 1) == len(g.edges)
    assert ks.hk_sum(h, ks.ALL) == sum(c << i for i, c in enumerate(h.counts))


def test_hk_sum_range_checks():
    h = ks.HVector((1, 3, 3, 1))
    assert ks.hk_sum(h, 2) == 6  # 3*C(2,2) + 1*C(3,2)
    assert ks.hk_sum(h, 3) == 1
    with pytest.raises(KOutOfRange):
        ks.hk_sum(h, 4)
    with pytest.raises(KOutOfRange):
        ks.hk_sum(h, -1)


def test_sinks_in_subset(cube3):
    g = cube3.graph
    o = ks.make_orientation(g, [1] * 12)  # everything points to the larger id
    assert ks.sinks_in_subset(g, o, frozenset(range(8))) == frozenset({7})
    assert ks.sinks_in_subset(g, o, frozenset({0, 1, 2, 3})) == frozenset({3})
    with pytest.raises(EmptySubset):
        ks.sinks_in_subset(g, o, frozenset())


def test_sinks_in_subset_requires_acyclic(square):
    o = ks.make_orientation(square, [1, 0, 1, 1])
    with pytest.raises(NotAcyclic):
        ks.sinks_in_subset(square, o, frozenset({0, 1}))


def test_reverse_orientation_mirrors_histogram(cube3):
    g = cube3.graph
    rng = random.Random(11)
    for _ in range(20):
        o = ks.make_orientation(g, [rng.randint(0, 1) for _ in g.edges])
        h = ks.indegree_histogram(g, o)
        hr = ks.indegree_histogram(g, ks.reverse_orientation(o))
        assert hr.counts == tuple(reversed(h.counts))
