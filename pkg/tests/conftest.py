"""Shared fixtures: standard quivers and the worked A_5 example."""
import pytest
from fastapi.testclient import TestClient

from app.features.crystals.domain.entities import ModClass
from app.features.quivers.domain.entities import Quiver, standard_quiver
from app.main import app
from tests.helpers import interval_module


@pytest.fixture
def a2() -> Quiver:
    return standard_quiver("A", 2)


@pytest.fixture
def d4() -> Quiver:
    """3 -> 1, 3 -> 2, 4 -> 3."""
    return standard_quiver("D", 4)


@pytest.fixture
def example_module() -> ModClass:
    """A_5, j = m = 3: the element with tableau [1 2 4 / 3 4 5 / 4 6 6]."""
    return interval_module(
        5,
        (1, 1, 1),
        (1, 3, 1),
        (2, 2, 1),
        (2, 3, 1),
        (2, 4, 1),
        (3, 3, 1),
        (3, 5, 2),
    )


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)
