import random

import pytest

from twisthom import catalog
from twisthom.homology import h1


@pytest.fixture(scope="session")
def n32():
    return catalog.load("n32")


@pytest.fixture(scope="session")
def n3p2():
    return catalog.load("n3p2")


@pytest.fixture(scope="session")
def n32_h1(n32):
    return h1(n32.presentation, n32.representation)


@pytest.fixture(scope="session")
def n3p2_h1(n3p2):
    return h1(n3p2.presentation, n3p2.representation)


@pytest.fixture
def rng():
    return random.Random(20240611)
