"""Randomized verification harness: every claim is checked against brute force.

Each claim runs ``trials`` independent trials whose seeds are derived from one
master seed, so a failing trial can be replayed by its seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BadRange
from .graph import Multigraph, contract_vertices, cut_of_side, is_bridge
from .oracle import (
    BruteObjective,
    brute_solve,
    enumerate_cs_cuts,
    random_connected_graph,
    verify_min_cut_connected,
)
from .solver import Objective, guard, phase1, solve_full, validate_candidate
from .spgraph import SeriesLabeling, build_from_script, random_sp_script, recognize
from .twosum import cs_cut_family_two_sum, solve_two_sum_full, two_sum

CLAIMS = ("oracle-equiv", "thm-4.1", "lemma-3.1", "two-sum", "recursion-2.1")
DEFAULT_MAX_N = {"oracle-equiv": 12, "thm-4.1": 9, "lemma-3.1": 8, "two-sum": 8, "recursion-2.1": 9}

POSITIVE = (1, 100)
SIGNED = (-50, 50)


def trial_seed(seed: int, t: int) -> int:
    return seed * 1_000_003 + t


def random_sp_instance(
    rng: random.Random,
    max_n: int,
    weight_range=POSITIVE,
    signed: bool = False,
    min_n: int = 2,
) -> tuple[Multigraph, SeriesLabeling]:
    """Random SP graph with ``min_n <= n <= max_n`` (only series splits add vertices)."""
    if max_n < max(min_n, 2):
        raise BadRange(f"max_n={max_n} is below the minimum of {max(min_n, 2)} vertices")
    while True:
        ops = rng.randint(max(min_n - 2, 0), max_n - 2)
        script = random_sp_script(rng.getrandbits(32), ops, weight_range, signed)
        g, labeling = build_from_script(script)
        if g.n >= min_n:
            return g, labeling


def check_oracle_equiv(rng: random.Random, max_n: int) -> list[str]:
    problems = []
    g, lab = random_sp_instance(rng, max_n)
    got = solve_full(g, lab, Objective.MAX).cut
    want = brute_solve(g, BruteObjective.MAX_CS)
    if got.weight != want.weight or not got.is_cs_cut:
        problems.append(f"max: solver {got.weight} vs oracle {want.weight}")
    got = solve_full(g, lab, Objective.MIN).cut
    want = brute_solve(g, BruteObjective.MIN_ALL)
    if got.weight != want.weight or not got.is_cs_cut:
        problems.append(f"min: solver {got.weight} vs oracle {want.weight}")
    g, lab = random_sp_instance(rng, max_n, SIGNED, signed=True)
    got = solve_full(g, lab, Objective.MAX).cut
    want = brute_solve(g, BruteObjective.MAX_CS)
    if got.weight != want.weight or not got.is_cs_cut:
        problems.append(f"signed max: solver {got.weight} vs oracle {want.weight}")
    return problems


def check_min_cut_sides(rng: random.Random, max_n: int) -> list[str]:
    n = rng.randint(2, max_n)
    g = random_connected_graph(rng.getrandbits(32), n, rng.randint(0, n * (n - 1) // 2))
    problems = []
    if not verify_min_cut_connected(g):
        problems.append("a minimum cut has a disconnected side")
    if brute_solve(g, BruteObjective.MIN_CS).weight != brute_solve(g, BruteObjective.MIN_ALL).weight:
        problems.append("min connected-sides cut differs from min cut")
    return problems


def _glue_part(rng: random.Random, max_n: int, signed: bool) -> tuple[Multigraph, int]:
    """Random SP part with n >= 3 and a uniformly chosen non-bridge edge to glue on."""
    weights = SIGNED if signed else POSITIVE
    while True:
        g, _ = random_sp_instance(rng, max_n, weights, signed, min_n=3)
        choices = [e.id for e in g.edges if not is_bridge(g, e.id)]
        if choices:
            return g, rng.choice(choices)


def two_sum_parts(rng: random.Random, max_n: int, signed: bool = False):
    g1, e1 = _glue_part(rng, max_n, signed)
    g2, e2 = _glue_part(rng, max_n, signed)
    return g1, e1, g2, e2


def check_two_sum_family(rng: random.Random, max_n: int) -> list[str]:
    g1, e1, g2, e2 = two_sum_parts(rng, max_n)
    composed = two_sum(g1, e1, g2, e2).graph
    family = {c.edge_ids for c in cs_cut_family_two_sum(g1, e1, g2, e2)}
    direct = {c.edge_ids for c in enumerate_cs_cuts(composed)}
    if family != direct:
        return [f"family has {len(family - direct)} extra and misses {len(direct - family)} cuts"]
    return []


def check_two_sum(rng: random.Random, max_n: int) -> list[str]:
    problems = []
    cases = [
        (False, Objective.MAX, BruteObjective.MAX_CS),
        (False, Objective.MIN, BruteObjective.MIN_ALL),
        (True, Objective.MAX, BruteObjective.MAX_CS),
    ]
    for signed, objective, brute in cases:
        g1, e1, g2, e2 = two_sum_parts(rng, max_n, signed)
        ts, cut, trace = solve_two_sum_full(g1, e1, g2, e2, objective)
        want = brute_solve(ts.graph, brute)
        tag = f"{'signed ' if signed else ''}{objective.value}"
        if cut.weight != want.weight or not cut.is_cs_cut:
            problems.append(f"{tag}: three-candidate {cut.weight} vs oracle {want.weight}")
        if trace.subsolver_calls != 4 or trace.comparisons != 3:
            problems.append(f"{tag}: {trace.subsolver_calls} calls, {trace.comparisons} comparisons")
    return problems


def contraction_graphs(g: Multigraph, labeling: SeriesLabeling, parent: list[int]):
    """``{j: (G_j, vertex map from g)}`` for j = n-1 .. 1, rebuilt from the merge forest."""
    out = {g.n - 1: (g, list(range(g.n)))}
    merged: set[int] = set()
    for j in range(g.n - 1, 1, -1):
        merged.add(labeling.order[j])
        groups = {}
        for x in merged:
            r = x
            while r in merged:
                r = parent[r]
            groups[x] = r
        out[j - 1] = contract_vertices(g, groups)
    return out


def check_recursion(
    g: Multigraph, labeling: SeriesLabeling, objective: Objective = Objective.MAX
) -> list[str]:
    """Optimum of each ``G_j`` equals the better of ``G_{j-1}``'s optimum and the
    valid trivial-cut candidate recorded at step ``j``."""
    brute = BruteObjective.MAX_CS if objective is Objective.MAX else BruteObjective.MIN_CS
    log = phase1(g, labeling, objective)
    guard(log)
    graphs = contraction_graphs(g, labeling, log.parent)
    opt = {j: brute_solve(gj, brute).weight for j, (gj, _) in graphs.items()}
    problems = []
    for j in range(2, g.n):
        gj, vmap = graphs[j]
        cand = log.candidate(j)
        trivial = cut_of_side(gj, {vmap[cand.vertex]})
        if trivial.edge_ids != cand.edge_ids or trivial.weight != cand.weight:
            problems.append(f"step {j}: candidate is not the trivial cut of v_j in G_j")
        direct = validate_candidate(g, cand)
        if not (cand.valid == direct == trivial.is_cs_cut):
            problems.append(f"step {j}: guard {log.valid[j]}, direct {direct}, G_j {trivial.is_cs_cut}")
        expected = opt[j - 1]
        if direct and objective.better(cand.weight, expected):
            expected = cand.weight
        if opt[j] != expected:
            problems.append(f"step {j}: optimum {opt[j]} but recursion gives {expected}")
    return problems


def check_recursion_trial(rng: random.Random, max_n: int) -> list[str]:
    g, lab = random_sp_instance(rng, max_n)
    problems = check_recursion(g, lab, Objective.MAX)
    if rng.random() < 0.5:
        problems += check_recursion(g, recognize(g), Objective.MIN)
    return problems


CHECKS = {
    "oracle-equiv": check_oracle_equiv,
    "thm-4.1": check_min_cut_sides,
    "lemma-3.1": check_two_sum_family,
    "two-sum": check_two_sum,
    "recursion-2.1": check_recursion_trial,
}


@dataclass
class VerifyReport:
    claim: str
    trials: int
    failures: list[int] = field(default_factory=list)
    messages: dict[int, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"claim": self.claim, "trials": self.trials, "failures": self.failures}


def run_claim(claim: str, trials: int, seed: int, max_n: int | None = None) -> VerifyReport:
    if claim not in CHECKS:
        raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
    check = CHECKS[claim]
    max_n = DEFAULT_MAX_N[claim] if max_n is None else max_n
    report = VerifyReport(claim, trials)
    for t in range(trials):
        s = trial_seed(seed, t)
        problems = check(random.Random(s), max_n)
        if problems:
            report.failures.append(s)
            report.messages[s] = problems
    return report
