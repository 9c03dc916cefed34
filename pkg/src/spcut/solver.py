"""Two-phase contraction solver for maximum connected-sides cut and minimum cut.

Phase I walks the series labeling from ``v_{n-1}`` down to ``v_2``. Each
labeled vertex has exactly two parallel closures ``P0`` (towards its first
witness neighbor) and ``P1``; the solver records the trivial-cut candidate
``P0 + P1`` and then contracts one closure (the lighter one when maximizing,
the heavier one when minimizing). Phase II scans the recorded candidates
against the last remaining closure.

A candidate ``delta(S_j)`` is only a connected-sides cut when ``G_j - v_j``
is connected, so by default invalid candidates are skipped (``guarded``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernel
from .errors import NotPositiveWeights
from .graph import Cut, Multigraph, cut_of_side, is_connected_induced
from .spgraph import SeriesLabeling, recognize


class Objective(enum.Enum):
    MAX = "max"
    MIN = "min"

    @property
    def maximize(self) -> bool:
        return self is Objective.MAX

    def better(self, a: int, b: int) -> bool:
        return a > b if self is Objective.MAX else a < b


@dataclass
class Candidate:
    j: int
    vertex: int
    side: frozenset[int]
    edge_ids: frozenset[int]
    weight: int
    valid: bool | None = None


@dataclass
class ReductionLog:
    """Everything Phase I learned; candidates are materialized on demand."""

    graph: Multigraph
    labeling: SeriesLabeling
    objective: Objective
    # per-step columns, indexed by j; numpy arrays when the compiled kernel ran
    into_u0: Sequence[bool]
    w0: Sequence[int]
    w1: Sequence[int]
    fresh: Sequence[bool]
    base_weight: int
    valid: Sequence[bool] | None = field(default=None, repr=False)

    @cached_property
    def parent(self) -> list[int]:
        """Merge forest: ``parent[v_j]`` is the neighbor ``v_j`` was contracted into."""
        par = [-1] * self.graph.n
        order, wit = self.labeling.order, self.labeling.witness
        for j in range(2, self.graph.n):
            u0, u1 = wit[j]
            par[order[j]] = u0 if self.into_u0[j] else u1
        return par

    @cached_property
    def _children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.graph.n)]
        for v, p in enumerate(self.parent):
            if p >= 0:
                kids[p].append(v)
        return kids

    def absorbed(self, vertex: int) -> frozenset[int]:
        """``vertex`` plus every original vertex contracted into it before it was itself reduced."""
        out = [vertex]
        stack = [vertex]
        while stack:
            x = stack.pop()
            kids = self._children[x]
            out.extend(kids)
            stack.extend(kids)
        return frozenset(out)

    @property
    def preimage(self) -> dict[int, frozenset[int]]:
        v0, v1 = self.labeling.order[0], self.labeling.order[1]
        return {v0: self.absorbed(v0), v1: self.absorbed(v1)}

    @property
    def base_cut(self) -> Cut:
        return cut_of_side(self.graph, self.absorbed(self.labeling.order[1]))

    def candidate(self, j: int) -> Candidate:
        v = self.labeling.order[j]
        side = self.absorbed(v)
        ids = frozenset(e.id for e in self.graph.edges if (e.u in side) != (e.v in side))
        valid = None if self.valid is None else bool(self.valid[j])
        return Candidate(j, v, side, ids, int(self.w0[j]) + int(self.w1[j]), valid)

    @property
    def candidates(self) -> list[Candidate]:
        return [self.candidate(j) for j in range(self.graph.n - 1, 1, -1)]


@dataclass(frozen=True)
class SolveResult:
    cut: Cut
    best_step: int
    candidates: int
    invalid_candidates: int
    log: ReductionLog = field(repr=False)


def _use_compiled(g: Multigraph, backend: str | None) -> bool:
    name = backend or kernel.BACKEND
    if name == "cython":
        if g.abs_weight >= kernel.INT64_SAFE:
            if backend == "cython":
                raise OverflowError("weights too large for the compiled kernel")
            return False
        return True
    kernel.get_backend(name)
    return False


def phase1(
    g: Multigraph,
    labeling: SeriesLabeling,
    objective: Objective = Objective.MAX,
    *,
    backend: str | None = None,
) -> ReductionLog:
    """Contract down to one closure, recording every trivial-cut candidate.

    Raises BadLabeling if some ``v_j`` does not have series degree 2 with the
    recorded witnesses at its step.
    """
    if _use_compiled(g, backend):
        into_u0, w0, w1, fresh, base = kernel.get_backend("cython").reduce_series(
            g.n, *g.arrays, *labeling.arrays, objective.maximize
        )
    else:
        into_u0, w0, w1, fresh, base = kernel.get_backend("python").reduce_series(
            g.n, *g.columns, *labeling.columns, objective.maximize
        )
    return ReductionLog(g, labeling, objective, into_u0, w0, w1, fresh, base)


def guard(log: ReductionLog, *, backend: str | None = None) -> Sequence[bool]:
    """Mark which candidates are connected-sides cuts; fills ``log.valid``."""
    n = log.graph.n
    if _use_compiled(log.graph, backend):
        fresh = np.ascontiguousarray(log.fresh, dtype=np.bool_)
        valid = kernel.get_backend("cython").guard_candidates(n, *log.labeling.arrays, fresh)
    else:
        valid = kernel.get_backend("python").guard_candidates(
            n, *log.labeling.columns, list(log.fresh)
        )
    log.valid = valid
    return valid


def validate_candidate(g: Multigraph, c: Candidate) -> bool:
    """Direct check on the input graph: is the complement of the candidate side connected?"""
    rest = set(range(g.n)) - c.side
    c.valid = bool(rest) and is_connected_induced(g, rest)
    return c.valid


def phase2(log: ReductionLog, *, guarded: bool = True, backend: str | None = None) -> tuple[int, int]:
    """Best step (1 = base closure) and its weight; the base closure wins ties, then the lowest step."""
    n = log.graph.n
    if guarded and log.valid is None:
        guard(log, backend=backend)
    maximize = log.objective.maximize
    if _use_compiled(log.graph, backend):
        valid = np.ascontiguousarray(log.valid if guarded else [], dtype=np.bool_)
        return kernel.get_backend("cython").scan_candidates(
            n,
            np.ascontiguousarray(log.w0, dtype=np.int64),
            np.ascontiguousarray(log.w1, dtype=np.int64),
            valid,
            log.base_weight,
            maximize,
            guarded,
        )
    return kernel.get_backend("python").scan_candidates(
        n, log.w0, log.w1, log.valid, log.base_weight, maximize, guarded
    )


def solve_full(
    g: Multigraph,
    labeling: SeriesLabeling | None = None,
    objective: Objective = Objective.MAX,
    *,
    guarded: bool = True,
    check_positive: bool = True,
    backend: str | None = None,
) -> SolveResult:
    """Solve and keep the bookkeeping (reduction log, candidate counts).

    With ``check_positive`` the minimum objective refuses weights <= 0, since
    only then is the minimum connected-sides cut a minimum cut.
    """
    objective = Objective(objective)
    if objective is Objective.MIN and check_positive and any(e.w <= 0 for e in g.edges):
        raise NotPositiveWeights("minimum cut needs strictly positive weights")
    if labeling is None:
        labeling = recognize(g)
    log = phase1(g, labeling, objective, backend=backend)
    valid = guard(log, backend=backend)
    best_j, best_w = phase2(log, guarded=guarded, backend=backend)
    if best_j == 1:
        side = log.absorbed(labeling.order[1])
    else:
        side = log.absorbed(labeling.order[best_j])
    cut = cut_of_side(g, side)
    assert cut.weight == best_w, (cut.weight, best_w)
    invalid = max(g.n - 2, 0) - int(np.count_nonzero(valid[2:]))
    return SolveResult(cut, best_j, max(g.n - 2, 0), invalid, log)


def solve(
    g: Multigraph,
    labeling: SeriesLabeling | None = None,
    objective: Objective = Objective.MAX,
    **kwargs,
) -> Cut:
    """Maximum connected-sides cut (``MAX``) or minimum cut (``MIN``) of a series-parallel graph.

    When ``labeling`` is omitted it is recovered with ``recognize``.
    """
    return solve_full(g, labeling, objective, **kwargs).cut
