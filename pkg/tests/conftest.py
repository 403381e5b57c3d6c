import pytest

from penny.constructions import (
    construct_16,
    construct_24,
    construct_leaf_island_13,
    construct_matchstick_8,
    construct_three_rhombus,
)
from penny.pennygraph import build_penny_graph


@pytest.fixture(scope="session")
def fixture_16():
    return construct_16()


@pytest.fixture(scope="session")
def fixture_24():
    return construct_24()


@pytest.fixture(scope="session")
def fixture_three_rhombus():
    return construct_three_rhombus()


@pytest.fixture(scope="session")
def fixture_matchstick():
    return construct_matchstick_8()


@pytest.fixture(scope="session")
def fixture_leaf_island():
    return construct_leaf_island_13()


@pytest.fixture(scope="session")
def graph_16(fixture_16):
    return build_penny_graph(fixture_16.points)


@pytest.fixture(scope="session")
def graph_24(fixture_24):
    return build_penny_graph(fixture_24.points)


@pytest.fixture(scope="session")
def graph_leaf_island(fixture_leaf_island):
    return build_penny_graph(fixture_leaf_island.points)
