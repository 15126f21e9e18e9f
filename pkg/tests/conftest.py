from __future__ import annotations

import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from longpath import SmallGraph


def labeled_graph_from(n: int, edge_mask: int) -> SmallGraph:
    pairs = list(combinations(range(n), 2))
    return SmallGraph.from_edges(
        n, [pairs[i] for i in range(len(pairs)) if edge_mask >> i & 1]
    )


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    nbits = n * (n - 1) // 2
    return labeled_graph_from(n, draw(st.integers(0, (1 << nbits) - 1)))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 6):
    g = draw(small_graphs(min_n, max_n).filter(lambda g: g.is_connected()))
    return g


@pytest.fixture
def c5() -> SmallGraph:
    return SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def claw() -> SmallGraph:
    """Star K1,3 with center 0."""
    return SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path3() -> SmallGraph:
    return SmallGraph.from_edges(3, [(0, 1), (1, 2)])
