from __future__ import annotations

import os
import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from plactic.tableaux import Tableau, insert  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def words(draw, rank: int | None = None, max_len: int = 8):
    n = draw(st.integers(1, 3)) if rank is None else rank
    w = draw(st.lists(st.integers(1, n + 1), max_size=max_len))
    return n, tuple(w)


@st.composite
def tableaux(draw, rank: int | None = None, min_len: int = 0, max_len: int = 8):
    """Random tableaux, obtained by inserting random words."""
    n = draw(st.integers(1, 3)) if rank is None else rank
    w = draw(st.lists(st.integers(1, n + 1), min_size=min_len, max_size=max_len))
    return insert(w, n)


@pytest.fixture
def example_tableaux() -> dict[str, Tableau]:
    return {
        "t": Tableau.from_rows([[1, 1, 2], [3, 4]], 3),
        "u": Tableau.from_rows([[1, 1, 3], [2, 4]], 3),
        "v": Tableau.from_rows([[1, 1, 4], [2, 3]], 3),
    }


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}")
