from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hyperq import Hypergroupoid, IntuitionisticFuzzySet

_ACCEPTANCE = []


@pytest.fixture
def acceptance_line():
    def record(number, passed, text):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {text}"
        _ACCEPTANCE.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


def grades(max_denominator=6):
    return st.integers(1, max_denominator).flatmap(
        lambda q: st.integers(0, q).map(lambda p: Fraction(p, q))
    )


@st.composite
def hyperquasigroups(draw, min_order=1, max_order=4):
    n = draw(st.integers(min_order, max_order))
    # a relabelled cyclic Latin square underneath guarantees reproducibility;
    # extra elements are then sprinkled into the cells
    perm = draw(st.permutations(range(n)))
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            extra = draw(st.integers(0, (1 << n) - 1)) if draw(st.booleans()) else 0
            row.append((1 << perm[(x + y) % n]) | extra)
        table.append(tuple(row))
    h = Hypergroupoid(n, tuple(table))
    assert h.is_hyperquasigroup
    return h


@st.composite
def fuzzy_sets(draw, n, max_denominator=6):
    return tuple(draw(grades(max_denominator)) for _ in range(n))


@st.composite
def ifs_on(draw, n, max_denominator=6):
    mu = draw(fuzzy_sets(n, max_denominator))
    lam = []
    for m in mu:
        g = draw(grades(max_denominator))
        lam.append(min(g, 1 - m))
    return IntuitionisticFuzzySet(mu, tuple(lam))


@st.composite
def hq_with_ifs(draw, min_order=1, max_order=4, max_denominator=6):
    h = draw(hyperquasigroups(min_order, max_order))
    return h, draw(ifs_on(h.order, max_denominator))
