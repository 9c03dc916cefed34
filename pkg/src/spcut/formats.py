"""EDGE and SCRIPT text formats.

EDGE::

    c <comment>
    p edge <n> <m>
    e <u> <v> <w>        (m lines, 0-based vertices)

SCRIPT::

    base <w>
    s <edge_id> <w_left> <w_right>
    p <edge_id> <w>

Weights are signed decimals with at most six fractional digits; they are
stored scaled by ``WEIGHT_SCALE`` so every comparison is exact.
"""

from __future__ import annotations

from decimal import Decimal, InvalidOperation, localcontext

from .errors import BadEdgeRef, ParseError, SelfLoop, WeightPrecisionExceeded
from .graph import Multigraph, build_graph, format_weight
from .spgraph import ParallelAdd, SeriesSplit, SPScript

WEIGHT_SCALE = 10**6


def parse_weight(token: str, line: int) -> int:
    try:
        value = Decimal(token)
    except InvalidOperation:
        raise ParseError(line, f"bad weight {token!r}") from None
    if not value.is_finite():
        raise ParseError(line, f"bad weight {token!r}")
    with localcontext() as ctx:
        ctx.prec = max(64, len(token) + 8)
        scaled = value.scaleb(6)
        if scaled != scaled.to_integral_value():
            raise WeightPrecisionExceeded(line, f"weight {token!r} has more than 6 fractional digits")
        return int(scaled)


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line, f"bad {what} {token!r}") from None
    if value < 0:
        raise ParseError(line, f"negative {what} {token!r}")
    return value


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts and parts[0] != "c":
            yield no, parts


def parse_graph_file(text: str) -> Multigraph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for no, parts in _lines(text):
        tag = parts[0]
        if tag == "p":
            if header is not None:
                raise ParseError(no, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(no, "expected 'p edge <n> <m>'")
            header = (_parse_int(parts[2], no, "vertex count"), _parse_int(parts[3], no, "edge count"))
        elif tag == "e":
            if len(parts) != 4:
                raise ParseError(no, "expected 'e <u> <v> <w>'")
            u = _parse_int(parts[1], no, "vertex")
            v = _parse_int(parts[2], no, "vertex")
            if u == v:
                raise SelfLoop(u, no)
            w = parse_weight(parts[3], no)
            if header is None:
                raise ParseError(no, "edge before the problem line")
            if u >= header[0] or v >= header[0]:
                raise ParseError(no, f"vertex out of range 0..{header[0] - 1}")
            edges.append((u, v, w))
        else:
            raise ParseError(no, f"unknown line type {tag!r}")
    if header is None:
        raise ParseError(0, "missing problem line")
    if len(edges) != header[1]:
        raise ParseError(0, f"header announces {header[1]} edges, found {len(edges)}")
    if header[0] < 2 or not edges:
        raise ParseError(0, "a graph needs at least two vertices and one edge")
    return build_graph(header[0], edges, scale=WEIGHT_SCALE)


def parse_script_file(text: str) -> SPScript:
    base: int | None = None
    ops = []
    live = set()
    next_id = 0
    for no, parts in _lines(text):
        tag = parts[0]
        if tag == "base":
            if base is not None:
                raise ParseError(no, "duplicate base line")
            if len(parts) != 2:
                raise ParseError(no, "expected 'base <w>'")
            base = parse_weight(parts[1], no)
            live.add(0)
            next_id = 1
            continue
        if base is None:
            raise ParseError(no, "script must start with a base line")
        if tag == "s" and len(parts) == 4:
            eid = _parse_int(parts[1], no, "edge id")
            if eid not in live:
                raise BadEdgeRef(len(ops), eid)
            ops.append(SeriesSplit(eid, parse_weight(parts[2], no), parse_weight(parts[3], no)))
            live.discard(eid)
            live.update((next_id, next_id + 1))
            next_id += 2
        elif tag == "p" and len(parts) == 3:
            eid = _parse_int(parts[1], no, "edge id")
            if eid not in live:
                raise BadEdgeRef(len(ops), eid)
            ops.append(ParallelAdd(eid, parse_weight(parts[2], no)))
            live.add(next_id)
            next_id += 1
        else:
            raise ParseError(no, f"bad script line {' '.join(parts)!r}")
    if base is None:
        raise ParseError(0, "missing base line")
    return SPScript(base, tuple(ops), WEIGHT_SCALE)


def format_graph(g: Multigraph) -> str:
    """EDGE text for ``g``; edges are written in id order, so ids survive a round trip
    only when they are already ``0..m-1``."""
    out = [f"p edge {g.n} {g.m}"]
    for e in sorted(g.edges, key=lambda e: e.id):
        out.append(f"e {e.u} {e.v} {format_weight(e.w, g.scale)}")
    return "\n".join(out) + "\n"


def format_script(script: SPScript) -> str:
    out = [f"base {format_weight(script.base, script.scale)}"]
    for op in script.ops:
        if isinstance(op, SeriesSplit):
            out.append(
                f"s {op.edge_id} {format_weight(op.w_left, script.scale)} "
                f"{format_weight(op.w_right, script.scale)}"
            )
        else:
            out.append(f"p {op.edge_id} {format_weight(op.w_new, script.scale)}")
    return "\n".join(out) + "\n"
