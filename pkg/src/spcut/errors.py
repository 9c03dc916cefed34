"""Exception hierarchy shared by every spcut module."""


class SpcutError(Exception):
    """Base class for all errors raised by spcut."""


class InputError(SpcutError):
    """Malformed or out-of-contract input (CLI exit code 3)."""


class SelfLoop(InputError):
    def __init__(self, u, line=None):
        self.u = u
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self-loop at vertex {u}{where}")


class VertexOutOfRange(InputError):
    pass


class EmptyGraph(InputError):
    pass


class EmptySide(InputError):
    pass


class FullSide(InputError):
    pass


class Disconnected(InputError):
    pass


class BadEdgeRef(InputError):
    def __init__(self, index, edge_id):
        self.index = index
        self.edge_id = edge_id
        super().__init__(f"op {index} references unknown edge id {edge_id}")


class BadRange(InputError):
    pass


class BadLabeling(InputError):
    def __init__(self, step, vertex, message="vertex lacks series degree 2"):
        self.step = step
        self.vertex = vertex
        super().__init__(f"step {step}, vertex {vertex}: {message}")


class NotPositiveWeights(InputError):
    pass


class TooLarge(InputError):
    pass


class MissingEdge(InputError):
    pass


class DegeneratePart(InputError):
    pass


class ParseError(InputError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class WeightPrecisionExceeded(ParseError):
    pass


class NotSeriesParallel(SpcutError):
    """Reduction got stuck; ``remainder`` is the irreducible vertex count."""

    def __init__(self, remainder):
        self.remainder = remainder
        super().__init__(f"not series parallel: {remainder} vertices remain irreducible")
