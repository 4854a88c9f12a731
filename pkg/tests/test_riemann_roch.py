from itertools import product

import numpy as np
import pytest

from weierstrass import (
    FloorUndefined,
    InvalidArgument,
    IntVec,
    Monomial,
    basis,
    dimension,
    dimension_full_support,
    dimension_many,
    full_floor,
    gamma_below,
    is_member,
    leq,
    lub,
    new_curve,
    norm,
    pole_vector,
    supported_floor,
)
from weierstrass.oracle import gamma_below_by_scan
from weierstrass.riemann_roch import full_support_terms

from conftest import SMALL_CURVES, random_alpha


def test_dimension_example_54():
    br = dimension(new_curve(3, 28, 3), (8, 7, -1))
    assert br.total == 2
    assert br.support() == [26, 27]
    assert br.n[26] == br.n[27] == 1
    assert len(br.n) == 28


def test_dimension_small_cases():
    c = new_curve(5, 6, 3)
    assert dimension(c, (-1, 0, 0)).total == 0
    br = dimension(c, (30, 0, 0))
    # degree 30 > 2g - 2 = 18, so ell = 30 + 1 - 10
    assert br.total == 21
    assert br.n == (6, 1, 2, 3, 4, 5)


def test_dimension_wrong_length():
    with pytest.raises(InvalidArgument):
        dimension(new_curve(5, 6, 3), (1, 2))


def test_full_support_dimension():
    c = new_curve(3, 28, 4)
    assert dimension_full_support(c, (8, 7, -1, 0)) == dimension(c, (8, 7, -1, 0)).total == 2
    assert dimension_full_support(new_curve(5, 6, 6), (0,) * 6) == 1
    assert dimension_full_support(new_curve(5, 6, 6), (30, 0, 0, 0, 0, 0)) == 21
    with pytest.raises(InvalidArgument):
        dimension_full_support(new_curve(3, 28, 3), (8, 7, -1))


@pytest.mark.parametrize("ab", [(5, 6), (2, 5), (4, 5), (3, 4)])
def test_full_support_matches_general(ab, rng):
    c = new_curve(ab[0], ab[1], ab[0] + 1)
    for _ in range(200):
        alpha = random_alpha(rng, c)
        assert dimension_full_support(c, alpha) == dimension(c, alpha).total


@pytest.mark.parametrize("abm", SMALL_CURVES)
def test_dimension_many_matches_scalar(abm, rng):
    c = new_curve(*abm)
    rows = [random_alpha(rng, c) for _ in range(300)]
    got = dimension_many(c, np.array(rows))
    assert list(got) == [dimension(c, r).total for r in rows]


@pytest.mark.parametrize("abm", [(5, 6, 3), (2, 5, 2), (3, 4, 4)])
def test_degree_law_exhaustive_box(abm):
    c = new_curve(*abm)
    g = c.genus
    span = range(-c.b - 2, c.b + 3)
    for alpha in product(span, repeat=c.m):
        d = sum(alpha)
        if d > 2 * g - 2:
            assert dimension(c, alpha).total == d + 1 - g
        elif d < 0:
            assert dimension(c, alpha).total == 0


@pytest.mark.parametrize("abm", SMALL_CURVES)
def test_dimension_matches_scan_class_count(abm, rng):
    c = new_curve(*abm)
    for _ in range(15 if c.m >= 4 else 40):
        alpha = random_alpha(rng, c, 2)
        firsts = {beta[0] for beta in gamma_below_by_scan(c, alpha)}
        assert dimension(c, alpha).total == len(firsts)


@pytest.mark.parametrize("abm", SMALL_CURVES)
def test_unit_steps(abm, rng):
    c = new_curve(*abm)
    for _ in range(100):
        alpha = IntVec(random_alpha(rng, c))
        base = dimension(c, alpha).total
        for i in range(1, c.m + 1):
            assert 0 <= dimension(c, alpha + IntVec.unit(c.m, i)).total - base <= 1


def test_basis_example_54():
    c = new_curve(3, 28, 3)
    assert basis(c, (8, 7, -1)) == [Monomial(2, (0, 0)), Monomial(1, (0, 0))]
    assert basis(c, (0, 0, 0)) == [Monomial(0, (0, 0))]
    assert basis(c, (-1, 0, 0)) == []


def test_basis_13_1_1():
    c = new_curve(5, 6, 3)
    monos = basis(c, (13, 1, 1))
    assert len(monos) == dimension(c, (13, 1, 1)).total == 7
    assert len({pole_vector(c, mo)[0] for mo in monos}) == 7


@pytest.mark.parametrize("abm", SMALL_CURVES)
def test_basis_consistency(abm, rng):
    c = new_curve(*abm)
    for _ in range(100):
        alpha = random_alpha(rng, c)
        monos = basis(c, alpha)
        poles = [pole_vector(c, mo) for mo in monos]
        assert len(monos) == dimension(c, alpha).total
        assert all(leq(p, alpha) for p in poles)
        assert len({p[0] for p in poles}) == len(poles)


def test_supported_floor_examples():
    c28 = new_curve(3, 28, 3)
    assert supported_floor(c28, (8, 7, -1)) == (6, -1, -1)
    assert supported_floor(new_curve(5, 6, 3), (13, 1, 1)) == (13, 1, 1)
    assert supported_floor(c28, (0, 0, 0)) == (0, 0, 0)
    with pytest.raises(FloorUndefined):
        supported_floor(c28, (-1, 0, 0))


def test_full_floor_examples():
    c = new_curve(3, 28, 4)
    assert full_floor(c, (8, 7, -1, 0)) == (6, -1, -1, -1)
    assert full_support_terms(c, (8, 7, -1, 0)).count(0) == 26
    c6 = new_curve(5, 6, 6)
    assert full_floor(c6, (6, 0, 0, 0, 0, 0))[0] == 6
    assert is_member(c6, (6, 0, 0, 0, 0, 0))
    assert full_floor(c6, (6, 0, 0, 0, 0, 0)) == (6, 0, 0, 0, 0, 0)
    assert leq(full_floor(c6, (24, 3, 1, 0, 5, 2)), (24, 3, 1, 0, 5, 2))
    with pytest.raises(InvalidArgument):
        full_floor(new_curve(3, 28, 3), (8, 7, -1))
    with pytest.raises(FloorUndefined):
        full_floor(c, (-1, 0, 0, 0))


@pytest.mark.parametrize("abm", SMALL_CURVES)
def test_floor_laws(abm, rng):
    c = new_curve(*abm)
    seen = 0
    while seen < 80:
        alpha = random_alpha(rng, c)
        br = dimension(c, alpha)
        if br.total == 0:
            continue
        seen += 1
        f = supported_floor(c, alpha)
        assert leq(f, alpha)
        assert dimension(c, f).total == br.total
        assert is_member(c, f)
        assert supported_floor(c, f) == f
        assert f == lub(gamma_below(c, alpha))
        if c.m == c.a + 1:
            assert full_floor(c, alpha) == f


def _min_norm_brute(c, alpha, margin):
    target = dimension(c, alpha).total
    best = None
    for delta in product(range(margin + 1), repeat=c.m):
        beta = tuple(x - d for x, d in zip(alpha, delta))
        if dimension(c, beta).total == target:
            key = norm(beta)
            if best is None or key < best[0]:
                best = (key, [beta])
            elif key == best[0]:
                best[1].append(beta)
    return best[1]


@pytest.mark.parametrize("abm", [(5, 6, 3), (2, 5, 3), (5, 6, 2)])
def test_minimal_norm_law(abm, rng):
    c = new_curve(*abm)
    done = 0
    while done < 12:
        alpha = random_alpha(rng, c, 2)
        if dimension(c, alpha).total == 0:
            continue
        done += 1
        minimisers = _min_norm_brute(c, alpha, 2 * c.b)
        assert minimisers == [tuple(supported_floor(c, alpha))]
