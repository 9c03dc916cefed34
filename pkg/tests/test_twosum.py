import pytest

from spcut.errors import DegeneratePart, MissingEdge
from spcut.graph import build_graph
from spcut.oracle import BruteObjective, brute_solve, enumerate_cs_cuts
from spcut.solver import Objective
from spcut.twosum import cs_cut_family_two_sum, solve_two_sum, solve_two_sum_full, two_sum


@pytest.fixture
def t_prime():
    return build_graph(3, [(0, 1, 1), (0, 2, 5), (2, 1, 1)])


def unit_triangle():
    return build_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])


def test_two_sum_shape(triangle, t_prime):
    ts = two_sum(triangle, 0, t_prime, 0)
    g = ts.graph
    assert (g.n, g.m) == (4, 4)
    assert ts.glue == (0, 1) and ts.right_vertices == (0, 1, 3)
    assert sorted((e.u, e.v, e.w) for e in g.edges) == [(0, 2, 2), (0, 3, 5), (2, 1, 3), (3, 1, 1)]


def test_two_sum_rejects(triangle, path3):
    with pytest.raises(MissingEdge):
        two_sum(triangle, 9, triangle, 0)
    with pytest.raises(DegeneratePart):
        two_sum(path3, 0, triangle, 0)
    with pytest.raises(DegeneratePart):
        two_sum(build_graph(2, [(0, 1, 1)]), 0, triangle, 0)


def test_family_of_unit_triangles():
    a, b = unit_triangle(), unit_triangle()
    family = cs_cut_family_two_sum(a, 0, b, 0)
    assert len(family) == 6
    assert family == enumerate_cs_cuts(two_sum(a, 0, b, 0).graph)
    assert solve_two_sum(a, 0, b, 0).weight == 2


def test_solve_t_and_t_prime(triangle, t_prime):
    ts, cut, trace = solve_two_sum_full(triangle, 0, t_prime, 0, Objective.MAX)
    assert cut.weight == 8 == brute_solve(ts.graph).weight
    assert [c.weight for c in trace.candidates] == [5, 6, 8]
    assert (trace.subsolver_calls, trace.comparisons) == (4, 3)
    assert trace.big_m == 1 + 6 + 7
    low = solve_two_sum(triangle, 0, t_prime, 0, Objective.MIN)
    assert low.weight == 3 == brute_solve(ts.graph, BruteObjective.MIN_ALL).weight


def test_custom_subsolver_is_used(triangle, t_prime):
    calls = []

    def sub(g, obj):
        calls.append(g.n)
        return brute_solve(g, BruteObjective.MAX_CS)

    assert solve_two_sum(triangle, 0, t_prime, 0, subsolver=sub).weight == 8
    assert calls == [2, 2, 3, 3]


def test_non_sp_part_uses_brute_force(k4, triangle):
    ts, cut, trace = solve_two_sum_full(k4, 0, triangle, 0)
    assert cut.weight == brute_solve(ts.graph).weight
    assert trace.subsolver_calls == 4
