from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropchain import RectTableau, is_generic, make_chain, uniform_chain

RUNNING_ROWS = [[1, 3, 4], [2, 5, 6]]


@pytest.fixture
def running_graph():
    return uniform_chain(6, 10, 1)


@pytest.fixture
def running_tableau():
    return RectTableau.from_rows(RUNNING_ROWS)


@st.composite
def tableaux(draw, max_cells=12):
    """Random rectangular standard tableau: drop 1..mn one at a time into
    rows, each row staying no longer than the one above."""
    m = draw(st.integers(1, max_cells))
    n = draw(st.integers(1, max_cells // m))
    rows = [[] for _ in range(m)]
    for value in range(1, m * n + 1):
        open_rows = [i for i in range(m) if len(rows[i]) < n and (i == 0 or len(rows[i]) < len(rows[i - 1]))]
        rows[draw(st.sampled_from(open_rows))].append(value)
    return RectTableau.from_rows(rows)


positive_rationals = st.builds(
    Fraction, st.integers(1, 60), st.integers(1, 12)
)


@st.composite
def generic_chains(draw, genus):
    """Chains whose every ell/m ratio, in lowest terms, has p + q > 2g - 2."""
    bound = 2 * genus - 2
    ratio = st.builds(Fraction, st.integers(1, 80), st.integers(1, 80)).filter(
        lambda q: q.numerator + q.denominator > bound
    )
    loops = []
    for _ in range(genus):
        m = draw(positive_rationals)
        loops.append((draw(ratio) * m, m))
    graph = make_chain(loops)
    assert is_generic(graph)
    return graph
