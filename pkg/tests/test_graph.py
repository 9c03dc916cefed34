from itertools import combinations

import pytest
from hypothesis import given

from spcut.errors import EmptyGraph, EmptySide, FullSide, SelfLoop, VertexOutOfRange
from spcut.graph import (
    build_graph,
    closure,
    contract_vertices,
    cut_of_side,
    format_weight,
    is_bridge,
    is_connected_induced,
    series_degree,
)

from .strategies import connected_graphs


def bfs_connected(edges, side):
    """Oracle: plain breadth-first search over an edge list."""
    side = set(side)
    start = min(side)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for u, v, _ in edges:
            for a, b in ((u, v), (v, u)):
                if a == x and b in side and b not in seen:
                    seen.add(b)
                    todo.append(b)
    return seen == side


def test_build_single_edge():
    g = build_graph(2, [(0, 1, 5)])
    assert g.n == 2 and g.m == 1
    [c] = g.closures()
    assert c.weight == 5 and c.edge_ids == {0}


def test_build_triangle_adjacency_matches_scan(triangle):
    assert [e.id for e in triangle.edges] == [0, 1, 2]
    assert len(triangle.closures()) == 3
    raw = [(0, 1, 1), (0, 2, 2), (2, 1, 3)]
    for v in range(3):
        assert set(triangle.incident(v)) == {i for i, (a, b, _) in enumerate(raw) if v in (a, b)}


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 0, 1)], SelfLoop),
        (3, [(0, 3, 1)], VertexOutOfRange),
        (1, [(0, 0, 1)], EmptyGraph),
        (3, [], EmptyGraph),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_closure_examples(diamond, triangle):
    c = closure(diamond, 0, 2)
    assert c.edge_ids == {0, 1} and c.weight == 6
    assert closure(diamond, 0, 1) is None
    f = closure(triangle, 0, 1)
    assert f.edge_ids == {0} and f.weight == 1


def test_series_degree(diamond, triangle):
    assert series_degree(diamond, 2) == 2
    assert series_degree(diamond, 0) == 1
    assert series_degree(triangle, 0) == 2


def test_cut_of_side_examples(triangle, diamond):
    c = cut_of_side(triangle, {2})
    assert c.edge_ids == {1, 2} and c.weight == 5 and c.is_cs_cut
    c = cut_of_side(diamond, {2})
    assert c.edge_ids == {0, 1, 2} and c.weight == 9
    assert c.side_connected and not c.coside_connected
    c = cut_of_side(build_graph(2, [(0, 1, 5)]), {0})
    assert c.weight == 5 and c.is_cs_cut and c.side == {1}


def test_cut_of_side_errors(triangle):
    with pytest.raises(EmptySide):
        cut_of_side(triangle, set())
    with pytest.raises(FullSide):
        cut_of_side(triangle, {0, 1, 2})


def test_is_connected_induced(triangle, diamond):
    assert not is_connected_induced(diamond, {0, 1})
    assert is_connected_induced(triangle, {0, 1})
    assert is_connected_induced(diamond, {1})
    with pytest.raises(EmptySide):
        is_connected_induced(diamond, [])


def test_is_bridge(triangle, path3, diamond):
    assert not any(is_bridge(triangle, e.id) for e in triangle.edges)
    assert all(is_bridge(path3, e.id) for e in path3.edges)
    assert [is_bridge(diamond, e.id) for e in diamond.edges] == [False, False, True]


def test_contract_vertices_keeps_edge_ids(triangle):
    g, vmap = contract_vertices(triangle, {2: 0})
    assert g.n == 2 and vmap == [0, 1, 0]
    assert {e.id for e in g.edges} == {0, 2}


@pytest.mark.parametrize(
    "w, scale, text",
    [(5, 1, "5"), (5_000_000, 10**6, "5"), (-1_500_000, 10**6, "-1.5"), (7, 10**6, "0.000007")],
)
def test_format_weight(w, scale, text):
    assert format_weight(w, scale) == text


@given(connected_graphs())
def test_cut_symmetry(g):
    everything = set(range(g.n))
    for k in range(1, g.n):
        for side in combinations(range(g.n), k):
            a = cut_of_side(g, side)
            b = cut_of_side(g, everything - set(side))
            assert a == b


@given(connected_graphs())
def test_closure_weights_partition_total(g):
    closures = g.closures()
    assert sum(c.weight for c in closures) == g.total_weight
    for v in range(g.n):
        assert series_degree(g, v) == sum(1 for c in closures if v in c.endpoints)


@given(connected_graphs(max_n=8))
def test_cut_flags_agree_with_bfs(g):
    raw = [(e.u, e.v, e.w) for e in g.edges]
    everything = set(range(g.n))
    for k in range(1, g.n):
        for side in combinations(range(1, g.n), k):
            c = cut_of_side(g, side)
            assert c.side_connected == bfs_connected(raw, side)
            assert c.coside_connected == bfs_connected(raw, everything - set(side))
            assert c.weight == sum(w for u, v, w in raw if (u in side) != (v in side))
