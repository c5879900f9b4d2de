import math

from hypothesis import strategies as st

from factorlen import new_semigroup


@st.composite
def semigroups(draw, min_k=2, max_k=4, max_gen=40):
    k = draw(st.integers(min_k, max_k))
    gens = draw(st.lists(st.integers(2, max_gen), min_size=k, max_size=k, unique=True)
                .map(sorted)
                .filter(lambda g: math.gcd(*g) == 1))
    return new_semigroup(gens)


ACCEPTANCE_LINES = []


def record_criterion(label, passed, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
