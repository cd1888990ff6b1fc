import pytest

import totaldom as td


@pytest.fixture
def figure1() -> td.Graph:
    """The 5-vertex WTD(2) example with labels x, y, z, t, w."""
    return td.Graph.from_edges(
        5,
        [(0, 1), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)],
        labels=("x", "y", "z", "t", "w"),
    )


@pytest.fixture(scope="session")
def atlas8():
    """Every connected isomorphism class with 2 <= n <= 8, as (key, Graph).

    Shared by the corpus-sweep tests; building it once costs under a minute.
    """
    return list(td.enumerate_graphs(td.SearchFilter(n_max=8)))


@pytest.fixture(scope="session")
def atlas7(atlas8):
    return [(k, g) for k, g in atlas8 if g.n <= 7]


@pytest.fixture(scope="session")
def atlas6():
    """Connected classes with 2 <= n <= 6 only; cheap enough to build alone."""
    return list(td.enumerate_graphs(td.SearchFilter(n_max=6)))
