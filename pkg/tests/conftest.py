from hypothesis import strategies as st

from cayleysn.partitions import CycleType, Partition


@st.composite
def partitions(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parts, left = [], n
    while left:
        part = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(part)
        left -= part
    return Partition(parts)


@st.composite
def cycle_types(draw, n):
    return CycleType.from_parts(draw(partitions(min_n=n, max_n=n)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
