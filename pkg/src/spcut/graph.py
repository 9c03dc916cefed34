"""Exact-weight multigraphs, parallel closures and cuts.

Vertices are ``0..n-1``. Edges carry a stable integer id and an exact integer
weight; decimal inputs are scaled to integers before they get here, and
``Multigraph.scale`` remembers the divisor so results can be printed back
unscaled.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .errors import EmptyGraph, EmptySide, FullSide, SelfLoop, VertexOutOfRange


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    w: int


@dataclass(frozen=True)
class ParallelClosure:
    endpoints: frozenset[int]
    edge_ids: frozenset[int]
    weight: int


@dataclass(frozen=True)
class Cut:
    """A cut delta(side); ``side`` is stored in canonical form (never holds vertex 0)."""

    side: frozenset[int]
    edge_ids: frozenset[int]
    weight: int
    side_connected: bool
    coside_connected: bool

    @property
    def is_cs_cut(self) -> bool:
        return self.side_connected and self.coside_connected


class Multigraph:
    """Immutable undirected multigraph without self-loops.

    Edge ids need not be contiguous: contraction keeps the ids of surviving
    edges so results can always be mapped back to the input graph.
    """

    def __init__(self, n: int, edges: Iterable[Edge], scale: int = 1):
        self.n = n
        self.edges = tuple(edges)
        self.scale = scale
        adj: list[list[int]] = [[] for _ in range(n)]
        by_id: dict[int, Edge] = {}
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise VertexOutOfRange(f"edge {e.id} has endpoint outside 0..{n - 1}")
            if e.u == e.v:
                raise SelfLoop(e.u)
            if e.id in by_id:
                raise ValueError(f"duplicate edge id {e.id}")
            by_id[e.id] = e
            adj[e.u].append(e.id)
            adj[e.v].append(e.id)
        self._adj = tuple(tuple(a) for a in adj)
        self._by_id = by_id

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (self.n, self.edges, self.scale) == (other.n, other.edges, other.scale)

    def __hash__(self):
        return hash((self.n, self.edges, self.scale))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        return self._by_id[edge_id]

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    def incident(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def other(self, edge_id: int, v: int) -> int:
        e = self._by_id[edge_id]
        return e.v if e.u == v else e.u

    def neighbors(self, v: int) -> set[int]:
        return {self.other(i, v) for i in self._adj[v]}

    @cached_property
    def columns(self) -> tuple[list[int], list[int], list[int]]:
        """Endpoint and weight columns in edge order."""
        return [e.u for e in self.edges], [e.v for e in self.edges], [e.w for e in self.edges]

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """int64 copies of ``columns``; only valid when ``abs_weight`` fits in int64."""
        return tuple(np.array(c, dtype=np.int64) for c in self.columns)

    @cached_property
    def total_weight(self) -> int:
        return sum(e.w for e in self.edges)

    @cached_property
    def abs_weight(self) -> int:
        return sum(abs(e.w) for e in self.edges)

    def weight_of(self, edge_ids: Iterable[int]) -> int:
        return sum(self._by_id[i].w for i in edge_ids)

    def with_weights(self, overrides: dict[int, int]) -> "Multigraph":
        """Copy with some edge weights replaced (ids and endpoints unchanged)."""
        edges = [e._replace(w=overrides[e.id]) if e.id in overrides else e for e in self.edges]
        return Multigraph(self.n, edges, self.scale)

    def closures(self) -> list[ParallelClosure]:
        bundles: dict[tuple[int, int], list[Edge]] = {}
        for e in self.edges:
            bundles.setdefault((min(e.u, e.v), max(e.u, e.v)), []).append(e)
        return [
            ParallelClosure(frozenset(k), frozenset(e.id for e in es), sum(e.w for e in es))
            for k, es in bundles.items()
        ]

    def is_connected(self) -> bool:
        return is_connected_induced(self, range(self.n))


def build_graph(n: int, edge_list: Iterable[tuple[int, int, int]], scale: int = 1) -> Multigraph:
    """Build a graph with sequential edge ids ``0..m-1`` in input order."""
    edges = [Edge(i, u, v, w) for i, (u, v, w) in enumerate(edge_list)]
    if n < 2 or not edges:
        raise EmptyGraph("a graph needs at least two vertices and one edge")
    return Multigraph(n, edges, scale)


def closure(g: Multigraph, u: int, v: int) -> ParallelClosure | None:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise VertexOutOfRange(f"bad vertex pair ({u}, {v})")
    ids = [i for i in g.incident(u) if g.other(i, u) == v]
    if not ids:
        return None
    return ParallelClosure(frozenset((u, v)), frozenset(ids), g.weight_of(ids))


def series_degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return len(g.neighbors(v))


def is_connected_induced(g: Multigraph, side: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``side`` is connected."""
    members = set(side)
    if not members:
        raise EmptySide("induced subgraph of an empty vertex set")
    start = next(iter(members))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in g.incident(x):
            y = g.other(i, x)
            if y in members and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(members)


def is_bridge(g: Multigraph, edge_id: int) -> bool:
    """True iff deleting this one edge disconnects its endpoints."""
    e = g.edge(edge_id)
    seen = {e.u}
    queue = deque([e.u])
    while queue:
        x = queue.popleft()
        for i in g.incident(x):
            if i == edge_id:
                continue
            y = g.other(i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return e.v not in seen


def cut_of_side(g: Multigraph, side: Iterable[int]) -> Cut:
    s = frozenset(side)
    if not s:
        raise EmptySide("cut side is empty")
    if any(not 0 <= v < g.n for v in s):
        raise VertexOutOfRange("cut side has a vertex out of range")
    if len(s) == g.n:
        raise FullSide("cut side is the whole vertex set")
    if 0 in s:
        s = frozenset(range(g.n)) - s
    ids = frozenset(e.id for e in g.edges if (e.u in s) != (e.v in s))
    co = frozenset(range(g.n)) - s
    return Cut(
        side=s,
        edge_ids=ids,
        weight=g.weight_of(ids),
        side_connected=is_connected_induced(g, s),
        coside_connected=is_connected_induced(g, co),
    )


def contract_vertices(g: Multigraph, groups: dict[int, int]) -> tuple[Multigraph, list[int]]:
    """Merge vertices along ``groups`` (vertex -> representative).

    Edges that become loops are dropped; surviving edges keep their ids.
    Returns the contracted graph and the map from old vertex to new vertex,
    where new vertices are numbered by increasing representative.
    """
    rep = [groups.get(v, v) for v in range(g.n)]
    reps = sorted(set(rep))
    index = {r: k for k, r in enumerate(reps)}
    vmap = [index[r] for r in rep]
    edges = [e._replace(u=vmap[e.u], v=vmap[e.v]) for e in g.edges if vmap[e.u] != vmap[e.v]]
    return Multigraph(len(reps), edges, g.scale), vmap


def format_weight(w: int, scale: int = 1) -> str:
    """Exact decimal rendering of ``w / scale``; ``scale`` is a power of ten."""
    sign = "-" if w < 0 else ""
    whole, rem = divmod(abs(w), scale)
    if rem == 0:
        return f"{sign}{whole}"
    digits = str(rem).rjust(len(str(scale)) - 1, "0").rstrip("0")
    return f"{sign}{whole}.{digits}"
