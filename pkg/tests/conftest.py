import pytest
from hypothesis import settings

from spcut.graph import build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def triangle():
    # f=(0,1,1), a=(0,2,2), b=(2,1,3)
    return build_graph(3, [(0, 1, 1), (0, 2, 2), (2, 1, 3)])


@pytest.fixture
def diamond():
    # a=(0,2,2), a'=(0,2,4), b=(2,1,3): delta({2}) is not a connected-sides cut
    return build_graph(3, [(0, 2, 2), (0, 2, 4), (2, 1, 3)])


@pytest.fixture
def path3():
    return build_graph(3, [(0, 2, 1), (2, 1, 1)])


@pytest.fixture
def k4():
    return build_graph(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])


ACCEPTANCE_LINES: list[tuple[int, str]] = []


@pytest.fixture
def report_criterion():
    """Record one pass/fail line per acceptance criterion."""

    def _report(number: int, title: str, ok: bool, detail: str, note: str | None = None) -> None:
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
        if note:
            line += f"\n    note: {note}"
        ACCEPTANCE_LINES.append((number, line))
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
