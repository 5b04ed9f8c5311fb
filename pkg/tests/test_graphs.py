from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcol import (
    ParameterError,
    RingParams,
    Vertex,
    build_graph,
    complete_bipartite,
    make_edge,
    ring_graph,
)


def is_connected(g):
    if not g.vertices:
        return True
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(g.vertices)


def test_ring_1_3_is_triangle():
    g = ring_graph(RingParams(1, 3))
    assert len(g.vertices) == 3
    assert len(g.edges) == 3
    assert g.is_regular() and g.max_degree() == 2


def test_ring_1_4_is_c4():
    g = ring_graph(RingParams(1, 4))
    assert len(g.vertices) == 4
    assert len(g.edges) == 4
    assert g.max_degree() == 2


def test_ring_2_4_counts_and_regularity():
    g = ring_graph(RingParams(2, 4))
    assert len(g.vertices) == 8
    assert len(g.edges) == 16
    assert g.is_regular()
    for v in g.vertices:
        assert g.degree(v) == 4


@given(n=st.integers(1, 5), k=st.integers(3, 10))
@settings(max_examples=40, deadline=None)
def test_ring_invariants(n, k):
    g = ring_graph(RingParams(n, k))
    assert len(g.vertices) == n * k
    assert len(g.edges) == n * n * k
    assert g.is_regular()
    assert g.max_degree() == 2 * n
    # handshake
    assert sum(g.degree(v) for v in g.vertices) == 2 * len(g.edges)


@given(k=st.integers(3, 12))
@settings(max_examples=20, deadline=None)
def test_ring_degenerates_to_cycle(k):
    g = ring_graph(RingParams(1, k))
    assert len(g.edges) == len(g.vertices) == k
    assert all(g.degree(v) == 2 for v in g.vertices)
    assert is_connected(g)


@given(n=st.integers(1, 6))
@settings(max_examples=20, deadline=None)
def test_complete_bipartite_invariants(n):
    g = complete_bipartite(n)
    assert len(g.vertices) == 2 * n
    assert len(g.edges) == n * n
    assert g.is_regular() and g.max_degree() == n
    layers = {v.layer for v in g.vertices}
    assert layers == {1, 2}
    for e in g.edges:
        assert {e.u.layer, e.v.layer} == {1, 2}
    # every cross pair joined
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            assert g.has_edge(Vertex(2, p), Vertex(1, q))


def test_complete_bipartite_small_cases():
    assert len(complete_bipartite(1).edges) == 1
    g = complete_bipartite(2)  # a 4-cycle
    assert len(g.edges) == 4 and g.max_degree() == 2
    assert len(complete_bipartite(3).edges) == 9


def test_params_validation():
    with pytest.raises(ParameterError):
        RingParams(0, 4)
    with pytest.raises(ParameterError):
        RingParams(2, 2)
    with pytest.raises(ParameterError):
        complete_bipartite(0)


def test_degree_of_unknown_vertex_raises():
    g = ring_graph(RingParams(1, 3))
    with pytest.raises(KeyError):
        g.degree(Vertex(9, 9))


def test_path_on_three_vertices_not_regular():
    vs = [Vertex(1, 1), Vertex(2, 1), Vertex(3, 1)]
    g = build_graph(1, 3, vs, [(vs[0], vs[1]), (vs[1], vs[2])])
    assert not g.is_regular()
    assert g.max_degree() == 2


def test_single_edge_max_degree():
    vs = [Vertex(1, 1), Vertex(2, 1)]
    g = build_graph(1, 2, vs, [(vs[0], vs[1])])
    assert g.max_degree() == 1


def test_edges_are_canonical_and_deduplicated():
    a, b = Vertex(2, 1), Vertex(1, 1)
    e = make_edge(a, b)
    assert (e.u, e.v) == (b, a)
    with pytest.raises(ParameterError):
        make_edge(a, a)
    vs = [a, b]
    with pytest.raises(ParameterError):
        build_graph(1, 2, vs, [(a, b), (b, a)])


def test_build_graph_rejects_unknown_endpoints_and_bad_labels():
    a, b = Vertex(1, 1), Vertex(2, 1)
    with pytest.raises(ParameterError):
        build_graph(1, 2, [a], [(a, b)])
    with pytest.raises(ParameterError):
        build_graph(1, 1, [Vertex(2, 1)], [])
    with pytest.raises(ParameterError):
        build_graph(1, 2, [a, a], [])
