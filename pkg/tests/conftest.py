"""Shared fixtures and Hypothesis strategies."""

import pytest
from hypothesis import strategies as st

from agents.corpus import build_corpus
from matroids.matroid import Matroid
from matroids.representations import GraphicRep
from tools.census import build_census
from tools.constructions import uniform, wheel, whirl


@st.composite
def graphic_matroids(draw, max_vertices: int = 5, max_edges: int = 8):
    """Cycle matroids of random multigraphs (loops and parallel edges allowed)."""
    v = draw(st.integers(min_value=1, max_value=max_vertices))
    vertex = st.integers(min_value=0, max_value=v - 1)
    edges = draw(st.lists(st.tuples(vertex, vertex), min_size=0, max_size=max_edges))
    return Matroid(len(edges), GraphicRep(v, tuple(edges)))


@st.composite
def uniform_matroids(draw, max_n: int = 7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    r = draw(st.integers(min_value=0, max_value=n))
    return uniform(r, n)


def small_matroids(max_edges: int = 8):
    return st.one_of(graphic_matroids(max_edges=max_edges), uniform_matroids())


@pytest.fixture
def u24():
    return uniform(2, 4)


@pytest.fixture
def w3():
    return wheel(3)[0]


@pytest.fixture
def w4():
    return wheel(4)[0]


@pytest.fixture
def whirl3():
    return whirl(3)[0]


@pytest.fixture(scope="session")
def census5():
    return build_census(5)


@pytest.fixture(scope="session")
def small_corpus(census5):
    return build_corpus(5, 4, records=census5)
