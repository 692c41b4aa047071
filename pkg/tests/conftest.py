import pytest

import ksystems as ks


def cycle_graph(m: int) -> ks.PolytopeGraph:
    """Polygon graph C_m as a 2-polytope graph."""
    return ks.validate_graph(2, m, [(i, (i + 1) % m) for i in range(m)])


@pytest.fixture(scope="session")
def cube3() -> ks.Instance:
    return ks.cube(3)


@pytest.fixture(scope="session")
def cube4() -> ks.Instance:
    return ks.cube(4)


@pytest.fixture(scope="session")
def simplex3() -> ks.Instance:
    return ks.simplex(3)


@pytest.fixture(scope="session")
def simplex4() -> ks.Instance:
    return ks.simplex(4)


@pytest.fixture(scope="session")
def prism() -> ks.Instance:
    return ks.product(ks.cube(1), ks.simplex(2))


@pytest.fixture(scope="session")
def fig1() -> ks.Instance:
    return ks.fig1()


@pytest.fixture(scope="session")
def square() -> ks.PolytopeGraph:
    return cycle_graph(4)
