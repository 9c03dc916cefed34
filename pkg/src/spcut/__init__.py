"""Maximum connected-sides cuts and minimum cuts on series-parallel multigraphs."""

from .errors import NotSeriesParallel, SpcutError
from .graph import (
    Cut,
    Edge,
    Multigraph,
    ParallelClosure,
    build_graph,
    closure,
    cut_of_side,
    is_connected_induced,
    series_degree,
)
from .kernel import BACKEND
from .oracle import BruteObjective, brute_solve, enumerate_cs_cuts, verify_min_cut_connected
from .solver import Objective, phase1, solve, validate_candidate
from .spgraph import (
    ParallelAdd,
    SeriesLabeling,
    SeriesSplit,
    SPScript,
    build_from_script,
    random_sp_script,
    recognize,
)
from .twosum import cs_cut_family_two_sum, solve_two_sum, two_sum

__version__ = "0.1.0"
