import pytest

from ribboncoh.samples import (
    BANANA,
    DOUBLELOOP,
    DUMBBELL,
    LOOP,
    NAMED,
    THETA0,
    THETA1,
    TRIANGLE,
)


@pytest.fixture
def named_graphs():
    return dict(NAMED)


@pytest.fixture
def loop():
    return LOOP


@pytest.fixture
def theta1():
    return THETA1


@pytest.fixture
def theta0():
    return THETA0


@pytest.fixture
def doubleloop():
    return DOUBLELOOP


@pytest.fixture
def dumbbell():
    return DUMBBELL


@pytest.fixture
def banana():
    return BANANA


@pytest.fixture
def triangle():
    return TRIANGLE
