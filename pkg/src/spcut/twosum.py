"""2-sums of graphs and the three-candidate solver on a 2-sum.

Convention: the endpoints of ``e1`` and ``e2`` are identified lower id to
lower id, and both identified edges are deleted from the composition. Pass a
graph with swapped endpoints to get the other orientation. As for matroid
2-sums, a glued edge may not be a bridge of its part: gluing on a bridge can
disconnect the composition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import DegeneratePart, Disconnected, MissingEdge, NotSeriesParallel, TooLarge
from .graph import Cut, Edge, Multigraph, contract_vertices, cut_of_side, is_bridge
from .oracle import BruteObjective, brute_solve, enumerate_cs_cuts
from .solver import Objective, solve
from .spgraph import recognize

Subsolver = Callable[[Multigraph, Objective], Cut]

MAX_FAMILY_N = 10


@dataclass(frozen=True)
class TwoSumResult:
    graph: Multigraph
    left_map: dict[int, int]
    right_map: dict[int, int]
    glue: tuple[int, int]
    left_vertices: tuple[int, ...]
    right_vertices: tuple[int, ...]


def _ends(g: Multigraph, edge_id: int) -> tuple[int, int]:
    e = g.edge(edge_id)
    return (e.u, e.v) if e.u < e.v else (e.v, e.u)


def _check_part(g: Multigraph, edge_id: int, name: str) -> None:
    if not g.has_edge(edge_id):
        raise MissingEdge(f"{name} part has no edge {edge_id}")
    if g.m < 2:
        raise DegeneratePart(f"{name} part has a single edge")
    if not g.is_connected():
        raise Disconnected(f"{name} part is disconnected")
    if is_bridge(g, edge_id):
        raise DegeneratePart(f"{name} glued edge {edge_id} is a bridge")


def two_sum(g1: Multigraph, e1: int, g2: Multigraph, e2: int) -> TwoSumResult:
    _check_part(g1, e1, "left")
    _check_part(g2, e2, "right")
    if g1.scale != g2.scale:
        raise ValueError("parts use different weight scales")
    a1, b1 = _ends(g1, e1)
    a2, b2 = _ends(g2, e2)
    vmap2 = [0] * g2.n
    nxt = g1.n
    for v in range(g2.n):
        if v == a2:
            vmap2[v] = a1
        elif v == b2:
            vmap2[v] = b1
        else:
            vmap2[v] = nxt
            nxt += 1
    edges: list[Edge] = []
    left_map: dict[int, int] = {}
    right_map: dict[int, int] = {}
    for e in g1.edges:
        if e.id != e1:
            left_map[e.id] = len(edges)
            edges.append(Edge(len(edges), e.u, e.v, e.w))
    for e in g2.edges:
        if e.id != e2:
            right_map[e.id] = len(edges)
            edges.append(Edge(len(edges), vmap2[e.u], vmap2[e.v], e.w))
    graph = Multigraph(nxt, edges, g1.scale)
    return TwoSumResult(graph, left_map, right_map, (a1, b1), tuple(range(g1.n)), tuple(vmap2))


def _left_rest(ts: TwoSumResult) -> set[int]:
    return set(ts.left_vertices) - set(ts.glue)


def _right_rest(ts: TwoSumResult) -> set[int]:
    return set(ts.right_vertices) - set(ts.glue)


def _lift_avoiding(ts: TwoSumResult, side: frozenset[int], right: bool) -> set[int]:
    """Side of a part cut that keeps the glued pair together, as a composed side."""
    vmap = ts.right_vertices if right else ts.left_vertices
    lifted = {vmap[v] for v in side}
    if ts.glue[0] in lifted:
        lifted |= _left_rest(ts) if right else _right_rest(ts)
    return lifted


def _lift_combined(ts: TwoSumResult, g1, s1, g2, s2, e1, e2) -> set[int]:
    """Compose two part cuts that both separate the glued pair."""
    a1, _ = _ends(g1, e1)
    a2, _ = _ends(g2, e2)
    all1, all2 = frozenset(range(g1.n)), frozenset(range(g2.n))
    side1 = s1 if a1 in s1 else all1 - s1
    side2 = s2 if a2 in s2 else all2 - s2
    return set(side1) | {ts.right_vertices[v] for v in side2}


def _family_cut(g: Multigraph, side: set[int], edge_ids: frozenset[int]) -> Cut:
    ref = cut_of_side(g, side)
    return Cut(ref.side, edge_ids, g.weight_of(edge_ids), ref.side_connected, ref.coside_connected)


def cs_cut_family_two_sum(g1: Multigraph, e1: int, g2: Multigraph, e2: int) -> set[Cut]:
    """Connected-sides cuts of the 2-sum assembled from the parts' cuts.

    Each part cut avoiding its glued edge is kept; each pair of part cuts that
    both contain their glued edge is merged. Edge sets are the mapped part
    edges, not recomputed from the composed sides.
    """
    if g1.n > MAX_FAMILY_N or g2.n > MAX_FAMILY_N:
        raise TooLarge(f"parts limited to n <= {MAX_FAMILY_N}")
    ts = two_sum(g1, e1, g2, e2)
    g = ts.graph
    c1 = enumerate_cs_cuts(g1)
    c2 = enumerate_cs_cuts(g2)
    family: set[Cut] = set()
    for cut in c1:
        if e1 not in cut.edge_ids:
            ids = frozenset(ts.left_map[i] for i in cut.edge_ids)
            family.add(_family_cut(g, _lift_avoiding(ts, cut.side, False), ids))
    for cut in c2:
        if e2 not in cut.edge_ids:
            ids = frozenset(ts.right_map[i] for i in cut.edge_ids)
            family.add(_family_cut(g, _lift_avoiding(ts, cut.side, True), ids))
    with1 = [c for c in c1 if e1 in c.edge_ids]
    with2 = [c for c in c2 if e2 in c.edge_ids]
    for x in with1:
        left_ids = {ts.left_map[i] for i in x.edge_ids if i != e1}
        for y in with2:
            ids = frozenset(left_ids | {ts.right_map[i] for i in y.edge_ids if i != e2})
            side = _lift_combined(ts, g1, x.side, g2, y.side, e1, e2)
            family.add(_family_cut(g, side, ids))
    return family


def default_subsolver(g: Multigraph, objective: Objective) -> Cut:
    """Contraction solver when the part is series parallel, brute force otherwise.

    ``MIN`` means minimum connected-sides cut here, so signed weights are fine.
    """
    try:
        labeling = recognize(g)
    except NotSeriesParallel:
        brute = BruteObjective.MAX_CS if objective is Objective.MAX else BruteObjective.MIN_CS
        return brute_solve(g, brute)
    return solve(g, labeling, objective, check_positive=False)


@dataclass
class TwoSumTrace:
    candidates: list[Cut | None] = field(default_factory=list)
    subsolver_calls: int = 0
    comparisons: int = 0
    big_m: int = 0


def solve_two_sum_full(
    g1: Multigraph,
    e1: int,
    g2: Multigraph,
    e2: int,
    objective: Objective = Objective.MAX,
    subsolver: Subsolver | None = None,
) -> tuple[TwoSumResult, Cut, TwoSumTrace]:
    objective = Objective(objective)
    sub = subsolver or default_subsolver
    ts = two_sum(g1, e1, g2, e2)
    g = ts.graph
    trace = TwoSumTrace()

    def call(part: Multigraph) -> Cut:
        trace.subsolver_calls += 1
        return sub(part, objective)

    # cases 1 and 2: best part cut avoiding the glued edge, by contracting it
    for part, eid, right in ((g1, e1, False), (g2, e2, True)):
        a, b = _ends(part, eid)
        shrunk, vmap = contract_vertices(part, {b: a})
        if shrunk.n < 2:
            trace.candidates.append(None)
            continue
        cut = call(shrunk)
        side = frozenset(v for v in range(part.n) if vmap[v] in cut.side)
        trace.candidates.append(cut_of_side(g, _lift_avoiding(ts, side, right)))

    # case 3: force the glued edge into both part optima with a big weight
    big = 1 + g1.abs_weight + g2.abs_weight
    trace.big_m = big
    forced = big if objective is Objective.MAX else -big
    s1 = call(g1.with_weights({e1: forced}))
    s2 = call(g2.with_weights({e2: forced}))
    if e1 not in s1.edge_ids or e2 not in s2.edge_ids:
        raise RuntimeError("forcing weight failed to put the glued edge into a part optimum")
    side = _lift_combined(ts, g1, s1.side, g2, s2.side, e1, e2)
    trace.candidates.append(cut_of_side(g, side))

    best: Cut | None = None
    for cand in trace.candidates:
        if cand is None or not cand.is_cs_cut:
            continue
        trace.comparisons += 1
        if best is None or objective.better(cand.weight, best.weight):
            best = cand
    assert best is not None
    return ts, best, trace


def solve_two_sum(
    g1: Multigraph,
    e1: int,
    g2: Multigraph,
    e2: int,
    objective: Objective = Objective.MAX,
    subsolver: Subsolver | None = None,
) -> Cut:
    """Optimum connected-sides cut of the 2-sum from four part solves and three candidates.

    The returned cut lives in ``two_sum(g1, e1, g2, e2).graph`` and its weight
    is recomputed from the real composed weights.
    """
    return solve_two_sum_full(g1, e1, g2, e2, objective, subsolver)[1]
