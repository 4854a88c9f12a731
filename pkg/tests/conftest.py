import random

import pytest

from weierstrass import new_curve

# (a, b, m) triples small enough for exhaustive checks
SMALL_CURVES = [(5, 6, 3), (5, 6, 2), (3, 28, 3), (4, 5, 5), (2, 5, 3), (3, 4, 4)]


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def hermitian5():
    return new_curve(5, 6, 3, 25)


@pytest.fixture
def curve28():
    return new_curve(3, 28, 3, 729)


def random_alpha(rng, c, spread=3):
    return tuple(rng.randint(-spread * c.b, spread * c.b) for _ in range(c.m))
