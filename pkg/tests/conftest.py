import random

import pytest

from fullerkit.growth import (seed_barrel, seed_dodecahedron, seed_family_one,
                              seed_family_two)


@pytest.fixture(scope="session")
def dodecahedron():
    return seed_dodecahedron()


@pytest.fixture(scope="session")
def barrel():
    return seed_barrel()


@pytest.fixture(scope="session")
def small_fullerenes():
    """A deterministic mixed bag of small fullerenes for property tests."""
    out = [seed_dodecahedron(), seed_barrel()]
    out += [seed_family_one(k) for k in (1, 2, 3)]
    out += [seed_family_two(k) for k in (1, 2, 3)]
    return out


@pytest.fixture()
def rng():
    return random.Random(20260823)
