import random

import pytest

from fracquat import Cube, Medium, OrderVector


@pytest.fixture
def unit_cube():
    return Cube(0.0, 1.0)


@pytest.fixture
def shifted_cube():
    return Cube(1.0, 2.0)


@pytest.fixture
def half_orders():
    return OrderVector.of("1/2", "1/2", "1/2")


@pytest.fixture
def mixed_orders():
    return OrderVector.of("1/4", "3/4", "1")


@pytest.fixture
def classical_orders():
    return OrderVector.of(1, 1, 1)


@pytest.fixture
def medium():
    return Medium(1.0, 2.0, 3.0, 1.0)


@pytest.fixture
def rng():
    return random.Random("fracquat-tests")
