"""Riemann-Roch spaces of divisors D = alpha_1 P_1 + ... + alpha_m P_m.

Every quantity is a closed form in floors of ``(alpha_j - i) / b``.  The
index ``i`` runs over 0..b-1; ``i = 0`` is the family of pure g-monomials
1 / (g_2^d_2 ... g_m^d_m) and ``i >= 1`` the family
h^(b-i) / (g_2^(d_2+1) ... g_m^(d_m+1)).  For each ``i`` the admissible
exponent sums form an interval ``[lower, upper]``; its length is the
summand N_i of the dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .curve import CurveFamily, Monomial
from .errors import FloorUndefined, InvalidArgument
from .lattice import IntVec, checked, floor_div


def _check_alpha(c: CurveFamily, alpha) -> IntVec:
    alpha = IntVec(alpha)
    if len(alpha) != c.m:
        raise InvalidArgument(f"alpha has length {len(alpha)}, curve has m={c.m}")
    return alpha


def _caps(c: CurveFamily, alpha: IntVec, i: int) -> List[int]:
    """Upper bounds floor((alpha_j - i)/b) on d_j, j = 2..m."""
    return [floor_div(checked(alpha[j] - i), c.b) for j in range(1, c.m)]


def _sum_lower(c: CurveFamily, alpha: IntVec, i: int) -> int:
    """Smallest admissible d_2 + ... + d_m for index ``i``."""
    a, b, m = c.a, c.b, c.m
    if i == 0:
        return -floor_div(alpha[0], b)
    return -floor_div(checked(alpha[0] + a * i - b * (a + 1 - m)), b)


def sum_interval(c: CurveFamily, alpha, i: int) -> Tuple[int, int, List[int]]:
    """``(lower, upper, caps)`` for the exponent sums belonging to index ``i``.

    The interval is empty when ``lower > upper``.
    """
    alpha = _check_alpha(c, alpha)
    if not 0 <= i < c.b:
        raise InvalidArgument(f"index i={i} outside 0..{c.b - 1}")
    caps = _caps(c, alpha, i)
    return _sum_lower(c, alpha, i), checked(sum(caps)), caps


@dataclass(frozen=True)
class DimensionBreakdown:
    """Per-index summands of the dimension; ``n[0]`` is the pure-g family."""

    n: Tuple[int, ...]
    total: int

    def support(self) -> List[int]:
        """Indices i with a nonzero summand."""
        return [i for i, x in enumerate(self.n) if x]


def dimension(c: CurveFamily, alpha) -> DimensionBreakdown:
    """ell(D_alpha) together with the summands N_0, ..., N_{b-1}."""
    alpha = _check_alpha(c, alpha)
    n = []
    for i in range(c.b):
        lo = _sum_lower(c, alpha, i)
        hi = sum(_caps(c, alpha, i))
        n.append(max(hi - lo + 1, 0))
    return DimensionBreakdown(tuple(n), checked(sum(n)))


def ell(c: CurveFamily, alpha) -> int:
    return dimension(c, alpha).total


def _require_full_support(c: CurveFamily):
    if c.m != c.a + 1:
        raise InvalidArgument(f"needs m = a+1 = {c.a + 1}, got m={c.m}")


def full_support_terms(c: CurveFamily, alpha) -> Tuple[int, ...]:
    """Summands N~_i of the dimension when all a+1 points are used."""
    _require_full_support(c)
    alpha = _check_alpha(c, alpha)
    a, b = c.a, c.b
    out = []
    for i in range(b):
        s = floor_div(checked(alpha[0] + i * a), b)
        s += sum(floor_div(alpha[j] - i, b) for j in range(1, c.m))
        out.append(max(s + 1, 0))
    return tuple(out)


def dimension_full_support(c: CurveFamily, alpha) -> int:
    """ell(A) for a divisor A supported on all of P_1..P_{a+1}."""
    return checked(sum(full_support_terms(c, alpha)))


def dimension_many(c: CurveFamily, alphas) -> np.ndarray:
    """Vectorised :func:`dimension` over the rows of an integer array."""
    A = np.asarray(alphas, dtype=np.int64)
    if A.ndim != 2 or A.shape[1] != c.m:
        raise InvalidArgument(f"expected an (N, {c.m}) array, got shape {A.shape}")
    a, b, m = c.a, c.b, c.m
    i = np.arange(b, dtype=np.int64)
    # lower[k, i]: lower end of the exponent-sum interval for row k, index i
    shift = np.where(i == 0, 0, a * i - b * (a + 1 - m))
    lower = -np.floor_divide(A[:, :1] + shift[None, :], b)
    upper = np.zeros_like(lower)
    for j in range(1, m):
        upper += np.floor_divide(A[:, j:j + 1] - i[None, :], b)
    return np.maximum(upper - lower + 1, 0).sum(axis=1)


def _representatives(c: CurveFamily, alpha: IntVec, i: int):
    """One exponent vector (d_2..d_m) per admissible sum, d_3.. pinned at their caps."""
    lo, hi, caps = sum_interval(c, alpha, i)
    rest = sum(caps[1:])
    for s in range(lo, hi + 1):
        yield (s - rest,) + tuple(caps[1:])


def basis(c: CurveFamily, alpha) -> List[Monomial]:
    """A basis of L(D_alpha) made of monomials in h and the g_j.

    Exactly one monomial per admissible (index, exponent sum) pair, so the
    pole vectors have pairwise distinct first coordinates.
    """
    alpha = _check_alpha(c, alpha)
    out = []
    for i in range(c.b):
        for d in _representatives(c, alpha, i):
            if i == 0:
                out.append(Monomial(0, tuple(-x for x in d)))
            else:
                out.append(Monomial(c.b - i, tuple(-(x + 1) for x in d)))
    return out


def supported_floor(c: CurveFamily, alpha) -> IntVec:
    """Minimum-degree divisor supported on P_1..P_m with the same space as D_alpha."""
    alpha = _check_alpha(c, alpha)
    br = dimension(c, alpha)
    if br.total == 0:
        raise FloorUndefined(f"L(D_alpha) = 0 for alpha={alpha}; the floor is undefined")
    a, b, m = c.a, c.b, c.m
    first = []
    rest = [[] for _ in range(m - 1)]
    for i in br.support():
        if i == 0:
            first.append(b * floor_div(alpha[0], b))
        else:
            first.append(-a * i + b * (a + 1 - m + floor_div(alpha[0] + a * i - b * (a + 1 - m), b)))
        for j in range(1, m):
            rest[j - 1].append(i + b * floor_div(alpha[j] - i, b))
    return IntVec([max(first)] + [max(r) for r in rest])


def full_floor(c: CurveFamily, alpha) -> IntVec:
    """Floor of a divisor supported on P_1..P_{a+1} (requires m = a+1)."""
    terms = full_support_terms(c, alpha)
    alpha = IntVec(alpha)
    if not any(terms):
        raise FloorUndefined(f"L(A) = 0 for alpha={alpha}; the floor is undefined")
    a, b = c.a, c.b
    live = [i for i, t in enumerate(terms) if t]
    first = max(-a * i + b * floor_div(alpha[0] + a * i, b) for i in live)
    rest = [max(i + b * floor_div(alpha[j] - i, b) for i in live) for j in range(1, c.m)]
    return IntVec([first] + rest)
