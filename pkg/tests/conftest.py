from hypothesis import strategies as st

from mackey_t3.partitions import Partition, enumerate_partitions


@st.composite
def partitions(draw, max_size=6):
    n = draw(st.integers(min_value=0, max_value=max_size))
    return draw(st.sampled_from(enumerate_partitions(n)))


def all_partitions_up_to(n):
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


P = Partition


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
