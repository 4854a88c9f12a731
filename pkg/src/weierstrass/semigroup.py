"""Generalised Weierstrass semigroup at P_1, ..., P_m and its generating set.

The absolute maximal elements are the translates of a finite window set by
the lattice spanned by eta^2, ..., eta^m.  Written out, every one of them is
one of

    type I  (1 <= i < b):  (-a i + b(a+1-m-sum d), i + b d_2, ..., i + b d_m)
    type II (i = 0):       (-b sum d,              b d_2,     ..., b d_m)

with d = (d_2, ..., d_m) an arbitrary integer vector.  Membership and the
maximality predicates are decided from the dimension formula.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .curve import CurveFamily, Monomial, pole_vector
from .errors import CapExceeded, InvalidArgument
from .lattice import IntVec, leq
from .riemann_roch import ell, sum_interval

DEFAULT_CAP = 10 ** 7
CAP_ENV = "WEIERSTRASS_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidArgument(f"{CAP_ENV}={raw!r} is not an integer") from None
    if cap <= 0:
        raise InvalidArgument(f"{CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class GeneratorData:
    """Window generators ``s_m`` (zero vector included) and the lattice generators ``etas``."""

    s_m: Tuple[IntVec, ...]
    etas: Tuple[IntVec, ...]

    def all_vectors(self) -> List[IntVec]:
        return list(self.s_m) + list(self.etas)


def window_element(c: CurveFamily, i: int) -> IntVec:
    """(a(b-i) - b(m-1), i, ..., i) for 1 <= i < b."""
    if not 1 <= i < c.b:
        raise InvalidArgument(f"i={i} outside 1..{c.b - 1}")
    return IntVec([c.a * (c.b - i) - c.b * (c.m - 1)] + [i] * (c.m - 1))


def eta(c: CurveFamily, i: int) -> IntVec:
    """Lattice generator with -b at position i-1 and +b at position i (1-based, 2 <= i <= m)."""
    if not 2 <= i <= c.m:
        raise InvalidArgument(f"eta^i is defined for 2 <= i <= {c.m}, got {i}")
    v = [0] * c.m
    v[i - 2] = -c.b
    v[i - 1] = c.b
    return IntVec(v)


def generating_data(c: CurveFamily) -> GeneratorData:
    s_m = [IntVec.zero(c.m)] + [window_element(c, i) for i in range(1, c.b)]
    s_m.sort(key=lambda v: (v[1:], v[0]))
    etas = tuple(eta(c, i) for i in range(2, c.m + 1))
    return GeneratorData(tuple(s_m), etas)


def in_window(c: CurveFamily, v) -> bool:
    """Whether coordinates 2..m of ``v`` all lie in [0, b)."""
    return all(0 <= x < c.b for x in IntVec(v)[1:])


@dataclass(frozen=True)
class TypedElement:
    """Parametrisation of an absolute maximal element.

    ``i = 0`` encodes type II; ``1 <= i < b`` encodes type I with that index.
    """

    i: int
    d: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))

    @property
    def kind(self) -> str:
        return "II" if self.i == 0 else "I"

    def monomial(self, c: CurveFamily) -> Monomial:
        if self.i == 0:
            return Monomial(0, tuple(-x for x in self.d))
        return Monomial(c.b - self.i, tuple(-(x + 1) for x in self.d))


def element_of(te: TypedElement, c: CurveFamily) -> IntVec:
    if len(te.d) != c.m - 1:
        raise InvalidArgument(f"need {c.m - 1} exponents, got {len(te.d)}")
    if not 0 <= te.i < c.b:
        raise InvalidArgument(f"type I index must be in 1..{c.b - 1}, got {te.i}")
    a, b, m = c.a, c.b, c.m
    s = sum(te.d)
    if te.i == 0:
        return IntVec([-b * s] + [b * x for x in te.d])
    i = te.i
    return IntVec([-a * i + b * (a + 1 - m - s)] + [i + b * x for x in te.d])


def _bounded_tuples(caps: List[int], lower: int) -> Iterator[Tuple[int, ...]]:
    """All integer tuples t with t_k <= caps[k] and sum(t) >= lower."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + caps[k]

    def rec(k: int, acc: int, prefix: Tuple[int, ...]):
        if k == n:
            yield prefix
            return
        # the remaining coordinates contribute at most suffix[k+1]
        for x in range(caps[k], lower - acc - suffix[k + 1] - 1, -1):
            yield from rec(k + 1, acc + x, prefix + (x,))

    if suffix[0] >= lower:
        yield from rec(0, 0, ())


def typed_elements_below(c: CurveFamily, alpha, cap: Optional[int] = None) -> List[TypedElement]:
    """Parameters of every absolute maximal element that is <= alpha."""
    cap = default_cap() if cap is None else cap
    out = []
    for i in range(c.b):
        lo, hi, caps = sum_interval(c, alpha, i)
        if lo > hi:
            continue
        for d in _bounded_tuples(caps, lo):
            out.append(TypedElement(i, d))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} generating-set elements below {tuple(alpha)}")
    return out


def gamma_below(c: CurveFamily, alpha, cap: Optional[int] = None) -> List[IntVec]:
    """All absolute maximal elements beta <= alpha, sorted lexicographically."""
    return sorted({element_of(te, c) for te in typed_elements_below(c, alpha, cap)})


def is_member(c: CurveFamily, alpha) -> bool:
    """alpha is a pole vector of some function regular outside P_1..P_m."""
    alpha = IntVec(alpha)
    top = ell(c, alpha)
    return all(ell(c, alpha - IntVec.unit(c.m, i)) + 1 == top for i in range(1, c.m + 1))


def is_classical_member(c: CurveFamily, alpha) -> bool:
    """Membership in the classical semigroup: a member with no negative coordinate."""
    return all(x >= 0 for x in IntVec(alpha)) and is_member(c, alpha)


def is_absolute_maximal(c: CurveFamily, alpha) -> bool:
    alpha = IntVec(alpha)
    return ell(c, alpha) == ell(c, alpha - IntVec.ones(c.m)) + 1 and is_member(c, alpha)


def is_discrepancy(c: CurveFamily, alpha, i: int, j: int) -> bool:
    """D_alpha is a discrepancy for (P_i, P_j): L(D) != L(D - P_j), L(D - P_i) = L(D - P_i - P_j)."""
    if i == j:
        raise InvalidArgument("discrepancy needs two distinct points")
    alpha = IntVec(alpha)
    if len(alpha) != c.m:
        raise InvalidArgument(f"alpha has length {len(alpha)}, curve has m={c.m}")
    ei, ej = IntVec.unit(c.m, i), IntVec.unit(c.m, j)
    return ell(c, alpha) != ell(c, alpha - ej) and ell(c, alpha - ei) == ell(c, alpha - ei - ej)


def translate(v, c: CurveFamily, coeffs) -> IntVec:
    """v + sum_k coeffs[k] * eta^(k+2)."""
    v = IntVec(v)
    for k, t in enumerate(coeffs):
        if t:
            v = v + t * eta(c, k + 2)
    return v


def comparable(u, v) -> bool:
    return leq(u, v) or leq(v, u)


def monomial_pole_vector(te: TypedElement, c: CurveFamily) -> IntVec:
    """Second route to :func:`element_of`, through the divisors of h and g_j."""
    return pole_vector(c, te.monomial(c))
