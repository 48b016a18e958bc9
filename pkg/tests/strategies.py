from hypothesis import strategies as st

from app.dto.FgAbGroup import FgAbGroup
from app.exactla import IntMatrix


@st.composite
def int_matrices(draw, min_dim: int = 0, max_dim: int = 5, bound: int = 9) -> IntMatrix:
    rows = draw(st.integers(min_dim, max_dim))
    cols = draw(st.integers(min_dim, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=rows * cols, max_size=rows * cols))
    return IntMatrix.from_entries(rows, cols, entries)


@st.composite
def square_matrices(draw, max_dim: int = 4, bound: int = 9) -> IntMatrix:
    n = draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n))
    return IntMatrix.from_entries(n, n, entries)


@st.composite
def small_groups(draw) -> FgAbGroup:
    rank = draw(st.integers(0, 2))
    orders = draw(st.lists(st.integers(2, 6), max_size=2))
    return FgAbGroup.from_cyclic(rank, orders)
