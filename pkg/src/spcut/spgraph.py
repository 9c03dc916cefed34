"""Series-parallel construction, recognition and series labelings."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Union

import numpy as np

from .errors import BadEdgeRef, BadLabeling, BadRange, Disconnected, NotSeriesParallel
from .graph import Edge, Multigraph


class SeriesSplit(NamedTuple):
    edge_id: int
    w_left: int
    w_right: int


class ParallelAdd(NamedTuple):
    edge_id: int
    w_new: int


Op = Union[SeriesSplit, ParallelAdd]


@dataclass(frozen=True)
class SPScript:
    base: int
    ops: tuple[Op, ...] = ()
    scale: int = 1


@dataclass(frozen=True)
class SeriesLabeling:
    """Elimination order ``v_0..v_{n-1}``.

    ``witness[j]`` is the neighbor pair ``(u0, u1)`` of ``order[j]`` when it is
    reduced; entries 0 and 1 are ``None``.
    """

    order: tuple[int, ...]
    witness: tuple[tuple[int, int] | None, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.order) != len(self.witness):
            raise ValueError("order and witness lengths differ")

    @cached_property
    def columns(self) -> tuple[list[int], list[int], list[int]]:
        """``(order, first witness, second witness)`` with 0 where no witness exists."""
        wit0 = [w[0] if w else 0 for w in self.witness]
        wit1 = [w[1] if w else 0 for w in self.witness]
        return list(self.order), wit0, wit1

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return tuple(np.array(c, dtype=np.int64) for c in self.columns)


def build_from_script(script: SPScript) -> tuple[Multigraph, SeriesLabeling]:
    """Replay a script. Script edge ids are renumbered 0..m-1 in creation order
    of the surviving edges; vertices are numbered in creation order."""
    live: dict[int, tuple[int, int, int]] = {0: (0, 1, script.base)}
    next_id = 1
    n = 2
    witness: list[tuple[int, int] | None] = [None, None]
    for k, op in enumerate(script.ops):
        if op.edge_id not in live:
            raise BadEdgeRef(k, op.edge_id)
        u, v, _ = live[op.edge_id]
        if isinstance(op, SeriesSplit):
            z = n
            n += 1
            del live[op.edge_id]
            live[next_id] = (u, z, op.w_left)
            live[next_id + 1] = (z, v, op.w_right)
            next_id += 2
            witness.append((u, v))
        else:
            live[next_id] = (u, v, op.w_new)
            next_id += 1
    edges = [Edge(i, u, v, w) for i, (u, v, w) in enumerate(live[k] for k in sorted(live))]
    return Multigraph(n, edges, script.scale), SeriesLabeling(tuple(range(n)), tuple(witness))


def _closure_adjacency(g: Multigraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    return adj


def recognize(g: Multigraph) -> SeriesLabeling:
    """Series labeling by repeatedly reducing the lowest-id vertex of series degree 2.

    Raises NotSeriesParallel with the size of the irreducible remainder.
    """
    if not g.is_connected():
        raise Disconnected("recognition needs a connected graph")
    adj = _closure_adjacency(g)
    alive = [True] * g.n
    heap = [v for v in range(g.n) if len(adj[v]) == 2]
    heapq.heapify(heap)
    remaining = g.n
    order = [0] * g.n
    witness: list[tuple[int, int] | None] = [None] * g.n
    while remaining > 2:
        v = -1
        while heap:
            x = heapq.heappop(heap)
            if alive[x] and len(adj[x]) == 2:
                v = x
                break
        if v < 0:
            raise NotSeriesParallel(remaining)
        a, b = sorted(adj[v])
        remaining -= 1
        order[remaining] = v
        witness[remaining] = (a, b)
        alive[v] = False
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        for x in (a, b):
            if len(adj[x]) == 2:
                heapq.heappush(heap, x)
    order[0], order[1] = sorted(v for v in range(g.n) if alive[v])
    return SeriesLabeling(tuple(order), tuple(witness))


def check_labeling(g: Multigraph, labeling: SeriesLabeling) -> None:
    """Replay the series reductions a labeling claims; raise BadLabeling on the first bad step."""
    if sorted(labeling.order) != list(range(g.n)):
        raise BadLabeling(-1, -1, "order is not a permutation of the vertices")
    adj = _closure_adjacency(g)
    for j in range(g.n - 1, 1, -1):
        v = labeling.order[j]
        wit = labeling.witness[j]
        if wit is None or adj[v] != set(wit) or len(adj[v]) != 2:
            raise BadLabeling(j, v)
        a, b = wit
        for x in (a, b):
            adj[x].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        adj[v] = set()
    v0, v1 = labeling.order[0], labeling.order[1]
    if adj[v0] != {v1}:
        raise BadLabeling(1, v1, "final two vertices are not joined by one closure")


def random_sp_script(
    seed: int,
    op_count: int,
    weight_range: tuple[int, int],
    allow_negative: bool = False,
) -> SPScript:
    lo, hi = weight_range
    if op_count < 0 or lo > hi or (not allow_negative and lo < 1) or lo == hi == 0:
        raise BadRange(f"invalid generator parameters op_count={op_count} range=({lo}, {hi})")
    rng = random.Random(seed)

    def draw() -> int:
        while True:
            w = rng.randint(lo, hi)
            if w != 0:
                return w

    base = draw()
    live = [0]
    next_id = 1
    ops: list[Op] = []
    for _ in range(op_count):
        k = rng.randrange(len(live))
        eid = live[k]
        if rng.random() < 0.5:
            ops.append(SeriesSplit(eid, draw(), draw()))
            live[k] = next_id
            live.append(next_id + 1)
            next_id += 2
        else:
            ops.append(ParallelAdd(eid, draw()))
            live.append(next_id)
            next_id += 1
    return SPScript(base, tuple(ops))
