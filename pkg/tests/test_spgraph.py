import random

import pytest
from hypothesis import given

from spcut.errors import BadEdgeRef, BadLabeling, BadRange, Disconnected, NotSeriesParallel
from spcut.graph import Edge, Multigraph, build_graph, series_degree
from spcut.spgraph import (
    ParallelAdd,
    SeriesLabeling,
    SeriesSplit,
    SPScript,
    build_from_script,
    check_labeling,
    random_sp_script,
    recognize,
)

from .strategies import sp_scripts


def edge_triples(g):
    return [(e.u, e.v, e.w) for e in g.edges]


def test_script_triangle():
    g, lab = build_from_script(SPScript(1, (ParallelAdd(0, 1), SeriesSplit(1, 2, 3))))
    assert edge_triples(g) == [(0, 1, 1), (0, 2, 2), (2, 1, 3)]
    assert lab.order == (0, 1, 2) and lab.witness[2] == (0, 1)


def test_script_diamond():
    g, lab = build_from_script(SPScript(2, (SeriesSplit(0, 2, 3), ParallelAdd(1, 4))))
    assert sorted(edge_triples(g)) == sorted([(0, 2, 2), (0, 2, 4), (2, 1, 3)])
    assert lab.order == (0, 1, 2)


def test_script_base_only():
    g, lab = build_from_script(SPScript(7))
    assert edge_triples(g) == [(0, 1, 7)]
    assert lab.order == (0, 1)


def test_script_bad_ref():
    with pytest.raises(BadEdgeRef) as info:
        build_from_script(SPScript(1, (SeriesSplit(0, 1, 1), ParallelAdd(0, 1))))
    assert info.value.index == 1


def test_recognize_triangle(triangle):
    # every vertex qualifies, so the lowest id is reduced first
    lab = recognize(triangle)
    assert lab.order == (1, 2, 0)
    assert lab.witness[2] == (1, 2)


def test_recognize_k4(k4):
    with pytest.raises(NotSeriesParallel) as info:
        recognize(k4)
    assert info.value.remainder == 4


def test_recognize_single_closure():
    lab = recognize(build_graph(2, [(0, 1, 1), (1, 0, 2), (0, 1, 3)]))
    assert lab.order == (0, 1)


def test_recognize_disconnected():
    with pytest.raises(Disconnected):
        recognize(build_graph(4, [(0, 1, 1), (2, 3, 1)]))


def test_recognize_star_is_not_sp():
    with pytest.raises(NotSeriesParallel):
        recognize(build_graph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]))


def test_check_labeling_rejects_bad_order(diamond):
    # vertex 0 has a single closure in the diamond
    lab = SeriesLabeling((2, 1, 0), (None, None, (1, 2)))
    with pytest.raises(BadLabeling):
        check_labeling(diamond, lab)


def test_random_script_examples():
    assert random_sp_script(1, 0, (1, 9)).ops == ()
    g, _ = build_from_script(random_sp_script(42, 10, (1, 100)))
    assert g.n <= 12 and g.is_connected()
    assert random_sp_script(5, 20, (1, 9)) == random_sp_script(5, 20, (1, 9))


def test_random_script_signed_excludes_zero():
    s = random_sp_script(3, 200, (-1, 1), allow_negative=True)
    weights = [s.base]
    for op in s.ops:
        weights.extend(op[1:])
    assert 0 not in weights and {-1, 1} <= set(weights)


@pytest.mark.parametrize(
    "ops, rng, neg", [(-1, (1, 2), False), (3, (5, 2), False), (3, (0, 5), False), (3, (0, 0), True)]
)
def test_random_script_bad_range(ops, rng, neg):
    with pytest.raises(BadRange):
        random_sp_script(0, ops, rng, neg)


def test_round_trip_1000_scripts():
    for seed in range(1000):
        g, _ = build_from_script(random_sp_script(seed, random.Random(seed).randint(0, 30), (1, 9)))
        check_labeling(g, recognize(g))


@given(sp_scripts(max_ops=25))
def test_script_labeling_is_valid(script):
    g, lab = build_from_script(script)
    check_labeling(g, lab)
    check_labeling(g, recognize(g))


@given(sp_scripts(max_ops=15))
def test_replay_counts(script):
    n, m = 2, 1
    for k in range(len(script.ops) + 1):
        g, _ = build_from_script(SPScript(script.base, script.ops[:k]))
        assert (g.n, g.m) == (n, m)
        if k < len(script.ops):
            if isinstance(script.ops[k], SeriesSplit):
                n += 1
            m += 1


@given(sp_scripts(max_ops=15))
def test_labeled_vertices_have_series_degree_two(script):
    g, lab = build_from_script(script)
    # the last labeled vertex is reducible in the input graph itself
    if g.n > 2:
        assert series_degree(g, lab.order[-1]) == 2


def test_recognition_verdict_is_order_insensitive(k4):
    rng = random.Random(0)
    graphs = [build_from_script(random_sp_script(s, 12, (1, 9)))[0] for s in range(50)]
    graphs.append(k4)
    graphs.append(build_graph(5, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)]))
    for g in graphs:
        def verdict(h):
            try:
                recognize(h)
                return True
            except NotSeriesParallel:
                return False

        base = verdict(g)
        for _ in range(5):
            edges = list(g.edges)
            rng.shuffle(edges)
            perm = list(range(g.n))
            rng.shuffle(perm)
            shuffled = Multigraph(
                g.n, [Edge(i, perm[e.u], perm[e.v], e.w) for i, e in enumerate(edges)]
            )
            assert verdict(shuffled) == base
