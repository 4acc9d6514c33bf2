from functools import lru_cache
from pathlib import Path

import pytest

from edgecone.census import census
from edgecone.graph import Graph, load_graph

FIXTURES = Path(__file__).parent / "fixtures"


def cycle(n: int) -> Graph:
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


NAMED = {
    "K2": Graph(2, ((1, 2),)),
    "P3": Graph(3, ((1, 2), (2, 3))),
    "C3": cycle(3),
    "C4": cycle(4),
    "C5": cycle(5),
    "C7": cycle(7),
    "K4": complete(4),
    "paw": Graph(4, ((1, 2), (2, 3), (1, 3), (3, 4))),
    "star": Graph(4, ((1, 2), (1, 3), (1, 4))),
    # triangle with a pendant edge at every vertex
    "corona": Graph(6, ((1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6))),
    # two triangles joined through a path: S is not normal
    "bowtie_path": Graph(7, ((1, 6), (1, 7), (2, 5), (2, 7), (3, 4), (3, 6), (4, 6), (5, 7))),
}


@lru_cache(maxsize=None)
def corpus(n_max: int) -> tuple:
    return tuple(census(n_max))


@pytest.fixture(scope="session")
def g9() -> Graph:
    return load_graph(FIXTURES / "g9.edges")


@pytest.fixture(scope="session")
def named():
    return NAMED
