import pytest

from tests.balls import building_ball, lattice_ball


@pytest.fixture(scope="session")
def building_ball_r2():
    return building_ball(2, 2)


@pytest.fixture(scope="session")
def lattice_ball_n3_r2():
    return lattice_ball(3, 2)
