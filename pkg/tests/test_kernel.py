import numpy as np
import pytest
from hypothesis import given

from spcut import kernel
from spcut.errors import BadLabeling
from spcut.graph import build_graph
from spcut.solver import Objective, guard, phase1, phase2, solve_full
from spcut.spgraph import SeriesLabeling, build_from_script, random_sp_script

from .strategies import sp_scripts

needs_c = pytest.mark.skipif("cython" not in kernel.available_backends(), reason="extension not built")


def as_lists(log):
    return [list(map(int, x)) for x in (log.into_u0, log.w0, log.w1, log.fresh)] + [log.base_weight]


def test_backend_registry():
    assert kernel.BACKEND in kernel.available_backends()
    assert kernel.get_backend("python").__name__ == "spcut._pykernel"
    with pytest.raises(ValueError):
        kernel.get_backend("fortran")


def test_triangle_reduction_python(triangle):
    lab = SeriesLabeling((0, 1, 2), (None, None, (0, 1)))
    log = phase1(triangle, lab, Objective.MAX, backend="python")
    # P0 = 2, P1 = 3: maximizing contracts the lighter closure P0, so P1 joins f
    assert (log.w0[2], log.w1[2], log.into_u0[2]) == (2, 3, True)
    assert log.base_weight == 1 + 3 and not log.fresh[2]
    assert solve_full(triangle, lab, Objective.MAX, backend="python").cut.weight == 5


@needs_c
@given(sp_scripts(max_ops=30, signed=True))
def test_backends_agree(script):
    g, lab = build_from_script(script)
    for obj in Objective:
        py = phase1(g, lab, obj, backend="python")
        cy = phase1(g, lab, obj, backend="cython")
        assert as_lists(py) == as_lists(cy)
        assert list(map(bool, guard(py, backend="python"))) == list(map(bool, guard(cy, backend="cython")))
        for guarded in (True, False):
            assert phase2(py, guarded=guarded, backend="python") == phase2(cy, guarded=guarded, backend="cython")


@needs_c
def test_backends_agree_large():
    g, lab = build_from_script(random_sp_script(11, 5000, (-1000, 1000), allow_negative=True))
    a = solve_full(g, lab, backend="python")
    b = solve_full(g, lab, backend="cython")
    assert a.cut == b.cut and a.best_step == b.best_step


@pytest.mark.parametrize("backend", kernel.available_backends())
def test_bad_labeling_raises(diamond, backend):
    lab = SeriesLabeling((2, 1, 0), (None, None, (1, 2)))
    with pytest.raises(BadLabeling):
        phase1(diamond, lab, backend=backend)


@pytest.mark.parametrize("backend", kernel.available_backends())
def test_bad_final_pair_raises(backend):
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    # witnesses for vertex 2 point at a pair that is not its neighborhood
    lab = SeriesLabeling((0, 1, 2), (None, None, (0, 0)))
    with pytest.raises(BadLabeling):
        phase1(g, lab, backend=backend)


def test_huge_weights_fall_back_to_exact():
    big = 1 << 70
    g = build_graph(3, [(0, 1, big), (0, 2, big + 1), (2, 1, 3)])
    cut = solve_full(g).cut
    assert cut.weight == 2 * big + 1
    if "cython" in kernel.available_backends():
        with pytest.raises(OverflowError):
            solve_full(g, backend="cython")


@needs_c
def test_compiled_outputs_are_numpy(triangle):
    log = phase1(triangle, SeriesLabeling((0, 1, 2), (None, None, (0, 1))), backend="cython")
    assert isinstance(log.w0, np.ndarray) and log.fresh.dtype == np.bool_
