import pytest

from weierstrass import (
    BoxSpec,
    CapExceeded,
    FloorUndefined,
    InvalidArgument,
    absolute_maximal_by_definition,
    dim_by_class_counting,
    dimension,
    floor_by_exhaustion,
    is_absolute_maximal,
    is_discrepancy,
    new_curve,
    supported_floor,
)
from weierstrass.oracle import discrepancy_by_counting, member_by_generators
from weierstrass.semigroup import is_member

from conftest import random_alpha


def test_class_counting_examples():
    c28 = new_curve(3, 28, 3)
    assert dim_by_class_counting(c28, (8, 7, -1), 1) == 2
    assert all(dim_by_class_counting(c28, (0, 0, 0), j) == 1 for j in (1, 2, 3))
    c = new_curve(5, 6, 3)
    assert dim_by_class_counting(c, (30, 0, 0), 2) == 21
    with pytest.raises(InvalidArgument):
        dim_by_class_counting(c, (0, 0, 0), 4)


def test_absolute_maximal_by_definition_examples():
    c = new_curve(5, 6, 3)
    assert absolute_maximal_by_definition(c, (13, 1, 1))
    assert not absolute_maximal_by_definition(c, (13, 2, 2))
    assert absolute_maximal_by_definition(c, (0, 0, 0))
    assert not absolute_maximal_by_definition(c, (1, 0, 0))


def test_floor_by_exhaustion_examples():
    assert floor_by_exhaustion(new_curve(3, 28, 3), (8, 7, -1)) == (6, -1, -1)
    c = new_curve(5, 6, 3)
    assert floor_by_exhaustion(c, (0, 0, 0)) == (0, 0, 0)
    assert floor_by_exhaustion(c, (7, 7, 1)) == (7, 7, 1)
    with pytest.raises(FloorUndefined):
        floor_by_exhaustion(c, (-1, 0, 0))


def test_floor_by_exhaustion_widens_small_box():
    c = new_curve(3, 28, 3)
    tight = BoxSpec.below((8, 7, -1), 1)
    assert floor_by_exhaustion(c, (8, 7, -1), box=tight) == (6, -1, -1)


def test_boxspec_limits():
    with pytest.raises(CapExceeded):
        BoxSpec.below((0, 0, 0, 0), 100)
    with pytest.raises(InvalidArgument):
        BoxSpec((1, 1), (0, 0))
    assert BoxSpec.below((0, 0), 2).volume == 9


@pytest.mark.parametrize("abm", [(5, 6, 3), (4, 5, 5), (3, 4, 4)])
def test_oracles_agree_with_closed_forms(abm, rng):
    c = new_curve(*abm)
    pairs = [(i, j) for i in range(1, c.m + 1) for j in range(1, c.m + 1) if i != j]
    for _ in range(25):
        alpha = random_alpha(rng, c, 2)
        d = dimension(c, alpha).total
        assert all(dim_by_class_counting(c, alpha, j) == d for j in range(1, c.m + 1))
        assert absolute_maximal_by_definition(c, alpha) == is_absolute_maximal(c, alpha)
        assert member_by_generators(c, alpha) == is_member(c, alpha)
        i, j = rng.choice(pairs)
        assert discrepancy_by_counting(c, alpha, i, j) == is_discrepancy(c, alpha, i, j)
        if d:
            assert floor_by_exhaustion(c, alpha) == supported_floor(c, alpha)
