"""Shared strategies and helpers for the test suite."""

from hypothesis import strategies as st

from shzeta.shapes import Partition


@st.composite
def partitions(draw, max_size: int = 12, max_rows: int = 5, max_cols: int = 6):
    """Non-empty partitions with at most ``max_size`` cells."""
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    parts = []
    prev = max_cols
    budget = max_size
    for _ in range(rows):
        hi = min(prev, budget)
        if hi < 1:
            break
        p = draw(st.integers(min_value=1, max_value=hi))
        parts.append(p)
        prev = p
        budget -= p
    return Partition(tuple(parts))
