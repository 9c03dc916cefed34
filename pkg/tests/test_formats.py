import pytest

from spcut.errors import BadEdgeRef, ParseError, SelfLoop, WeightPrecisionExceeded
from spcut.formats import (
    WEIGHT_SCALE,
    format_graph,
    format_script,
    parse_graph_file,
    parse_script_file,
    parse_weight,
)
from spcut.spgraph import build_from_script, random_sp_script

T_EDGES = "c triangle\np edge 3 3\ne 0 1 1\ne 0 2 2\ne 2 1 3\n"


def test_parse_graph():
    g = parse_graph_file(T_EDGES)
    assert (g.n, g.m, g.scale) == (3, 3, WEIGHT_SCALE)
    assert [e.w for e in g.edges] == [1_000_000, 2_000_000, 3_000_000]


def test_graph_round_trip():
    g = parse_graph_file(T_EDGES)
    assert parse_graph_file(format_graph(g)) == g
    assert "e 2 1 3" in format_graph(g)


@pytest.mark.parametrize(
    "token, value",
    [("1", 1_000_000), ("-2.5", -2_500_000), ("0.000001", 1), ("1e-3", 1000), ("+3.000000", 3_000_000)],
)
def test_parse_weight(token, value):
    assert parse_weight(token, 1) == value


@pytest.mark.parametrize("token", ["0.0000001", "1e-7"])
def test_weight_precision(token):
    with pytest.raises(WeightPrecisionExceeded):
        parse_weight(token, 4)


@pytest.mark.parametrize("token", ["abc", "nan", "inf", ""])
def test_bad_weight(token):
    with pytest.raises(ParseError):
        parse_weight(token, 1)


def test_self_loop_reported_before_header():
    with pytest.raises(SelfLoop):
        parse_graph_file("e 0 0 1\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 3 2\ne 0 1 1\n", 0),
        ("p edge 3 1\ne 0 5 1\n", 2),
        ("p edge 3 1\nx 0 1 1\n", 2),
        ("e 0 1 1\n", 1),
        ("p edge 3 1\np edge 3 1\n", 2),
        ("p node 3 1\n", 1),
        ("p edge 3 1\ne 0 1\n", 2),
        ("p edge -3 1\n", 1),
    ],
)
def test_graph_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_file(text)
    assert info.value.line == line


def test_parse_script():
    s = parse_script_file("base 1\np 0 1\ns 1 2 3\n")
    g, lab = build_from_script(s)
    assert [(e.u, e.v, e.w // WEIGHT_SCALE) for e in g.edges] == [(0, 1, 1), (0, 2, 2), (2, 1, 3)]


def test_script_bad_ref():
    with pytest.raises(BadEdgeRef):
        parse_script_file("base 1\ns 0 1 1\np 0 1\n")


@pytest.mark.parametrize("text", ["s 0 1 1\n", "base 1\nbase 2\n", "base 1\nq 0\n", "", "base 1\np 0\n"])
def test_script_errors(text):
    with pytest.raises(ParseError):
        parse_script_file(text)


def test_script_round_trip():
    s = random_sp_script(9, 30, (-9, 9), allow_negative=True)
    s = type(s)(s.base * WEIGHT_SCALE, tuple(type(op)(op[0], *(w * WEIGHT_SCALE for w in op[1:])) for op in s.ops), WEIGHT_SCALE)
    assert parse_script_file(format_script(s)) == s
