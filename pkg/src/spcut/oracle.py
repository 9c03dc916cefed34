"""Brute-force ground truth over all vertex bipartitions.

Sides are bitmasks over vertices ``1..n-1`` (the canonical side never holds
vertex 0), so a graph on ``n`` vertices has ``2**(n-1) - 1`` cuts. All masks
are evaluated together with numpy.
"""

from __future__ import annotations

import enum
import random

import numpy as np

from .errors import Disconnected, NotPositiveWeights, TooLarge
from .graph import Cut, Multigraph, build_graph, cut_of_side, is_connected_induced

MAX_ENUM_N = 16
MAX_VERIFY_N = 14


class BruteObjective(enum.Enum):
    MAX_CS = "max-cs"
    MIN_CS = "min-cs"
    MIN_ALL = "min-all-cuts"


def _check_size(g: Multigraph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"brute force limited to n <= {limit}, got {g.n}")


def _all_sides(n: int) -> np.ndarray:
    return np.arange(1, 1 << (n - 1), dtype=np.int64) << 1


def _connected_masks(g: Multigraph, sets: np.ndarray) -> np.ndarray:
    """Vectorized flood fill: which masks induce a connected subgraph."""
    nbr = [0] * g.n
    for e in g.edges:
        nbr[e.u] |= 1 << e.v
        nbr[e.v] |= 1 << e.u
    reach = sets & -sets
    while True:
        grown = reach.copy()
        for v in range(g.n):
            hit = ((reach >> v) & 1).astype(bool)
            grown[hit] |= nbr[v]
        grown &= sets
        if np.array_equal(grown, reach):
            return reach == sets
        reach = grown


def _cut_weights(g: Multigraph, sides: np.ndarray) -> np.ndarray:
    dtype = np.int64 if g.abs_weight < (1 << 62) else object
    total = np.zeros(len(sides), dtype=dtype)
    for e in g.edges:
        crossing = ((sides >> e.u) ^ (sides >> e.v)) & 1
        total += crossing.astype(dtype) * e.w
    return total


def _cs_mask(g: Multigraph, sides: np.ndarray) -> np.ndarray:
    full = (1 << g.n) - 1
    return _connected_masks(g, sides) & _connected_masks(g, full ^ sides)


def _side_set(mask: int) -> frozenset[int]:
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)


def enumerate_cs_cuts(g: Multigraph) -> set[Cut]:
    """All connected-sides cuts, in canonical form."""
    _check_size(g, MAX_ENUM_N)
    sides = _all_sides(g.n)
    return {cut_of_side(g, _side_set(int(s))) for s in sides[_cs_mask(g, sides)]}


def cut_weight_table(g: Multigraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(sides, weights, is_cs)`` for every bipartition; handy for sweeping claims."""
    _check_size(g, MAX_ENUM_N)
    sides = _all_sides(g.n)
    return sides, _cut_weights(g, sides), _cs_mask(g, sides)


def brute_solve(g: Multigraph, objective: BruteObjective | str = BruteObjective.MAX_CS) -> Cut:
    """Exact optimum by enumeration; ties go to the lexicographically smallest sorted side."""
    objective = BruteObjective(objective)
    _check_size(g, MAX_ENUM_N)
    if objective is BruteObjective.MIN_ALL and not g.is_connected():
        raise Disconnected("minimum over all cuts needs a connected graph")
    sides, weights, cs = cut_weight_table(g)
    if objective is not BruteObjective.MIN_ALL:
        sides, weights = sides[cs], weights[cs]
    if len(sides) == 0:
        raise Disconnected("graph has no connected-sides cut")
    best = weights.max() if objective is BruteObjective.MAX_CS else weights.min()
    tied = [_side_set(int(s)) for s in sides[weights == best]]
    return cut_of_side(g, min(tied, key=sorted))


def verify_min_cut_connected(g: Multigraph) -> bool:
    """True iff every minimum-weight cut has both sides connected."""
    _check_size(g, MAX_VERIFY_N)
    if any(e.w <= 0 for e in g.edges):
        raise NotPositiveWeights("the claim is about strictly positive weights")
    if not g.is_connected():
        raise Disconnected("the claim is about connected graphs")
    _, weights, cs = cut_weight_table(g)
    minimal = weights == weights.min()
    return bool(np.all(cs[minimal]))


def count_cs_cuts_recursive(g: Multigraph) -> int:
    """Independent count: grow every connected set that contains vertex 0 and
    test whether its complement is connected."""
    nbrs = [g.neighbors(v) for v in range(g.n)]
    everything = frozenset(range(g.n))
    count = 0

    def grow(sub: frozenset[int], cand: set[int], banned: set[int]):
        nonlocal count
        if sub != everything and is_connected_induced(g, everything - sub):
            count += 1
        banned = set(banned)
        for v in sorted(cand):
            bigger = sub | {v}
            grow(bigger, (cand | nbrs[v]) - bigger - banned, banned | {v})
            banned.add(v)

    grow(frozenset([0]), set(nbrs[0]), set())
    return count


def random_connected_graph(
    seed: int,
    n: int,
    extra_edges: int,
    weight_range: tuple[int, int] = (1, 100),
) -> Multigraph:
    """Random spanning tree plus ``extra_edges`` uniform extra edges (parallels allowed)."""
    rng = random.Random(seed)
    lo, hi = weight_range
    perm = list(range(n))
    rng.shuffle(perm)
    edges = []
    for k in range(1, n):
        edges.append((perm[k], perm[rng.randrange(k)], rng.randint(lo, hi)))
    for _ in range(extra_edges):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.randint(lo, hi)))
    rng.shuffle(edges)
    return build_graph(n, edges)
