"""Curves with plane model f(y) = g(x) and the functions h, g_j on them.

Only the combinatorial data of the curve matter here: ``a = deg f``,
``b = deg g``, and the number ``m`` of distinguished rational points
P_1, ..., P_m (P_1 being the common pole of x and y).  Points are referred to
by position; no coordinates over F_q are ever computed.

The two families of functions used everywhere are

    div(h)   = P_2 + ... + P_{a+1} - a P_1
    div(g_j) = b P_j - b P_1,          j = 2, ..., a+1,

so the pole vectors restricted to P_1..P_m are (a, -1, ..., -1) and
(b, 0, ..., -b, ..., 0).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .errors import CurveError, InvalidArgument
from .lattice import IntVec


def _prime_power_base(n: int) -> Optional[int]:
    """The prime p with n = p^k (k >= 1), or None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def is_prime_power(n: int) -> bool:
    return _prime_power_base(n) is not None


class SmallFieldWarning(UserWarning):
    """The field has fewer than a+1 elements; geometric claims may not hold."""


@dataclass(frozen=True)
class CurveFamily:
    """Parameters of a curve X_{f,g} together with ``m`` chosen points.

    Use :func:`new_curve` or :func:`hermitian_type_preset` to build one; the
    constructor validates the same hypotheses.
    """

    a: int
    b: int
    m: int
    q: Optional[int] = None
    small_field: bool = field(init=False, default=False)

    def __post_init__(self):
        a, b, m, q = self.a, self.b, self.m, self.q
        for name, v in (("a", a), ("b", b), ("m", m)):
            if isinstance(v, bool) or not isinstance(v, int):
                raise CurveError(f"{name} must be an integer, got {v!r}")
        if a <= 0 or b <= 0:
            raise CurveError(f"a and b must be positive (a={a}, b={b})")
        if gcd(a, b) != 1:
            raise CurveError(f"gcd(a, b) must be 1, got gcd({a}, {b}) = {gcd(a, b)}")
        if m < 2:
            raise CurveError(f"need at least two points, got m={m}")
        if m > a + 1:
            raise CurveError(f"m={m} exceeds a+1={a + 1}")
        if q is not None:
            if isinstance(q, bool) or not isinstance(q, int) or not is_prime_power(q):
                raise CurveError(f"q must be a prime power, got {q!r}")
            if q < a + 1:
                object.__setattr__(self, "small_field", True)
                warnings.warn(
                    f"q={q} < a+1={a + 1}: the semigroup results assume q >= a+1",
                    SmallFieldWarning,
                    stacklevel=3,
                )

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    def with_m(self, m: int) -> "CurveFamily":
        """Same curve, different number of distinguished points."""
        return CurveFamily(self.a, self.b, m, self.q)

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "m": self.m, "q": self.q, "genus": self.genus}


def new_curve(a: int, b: int, m: int, q: Optional[int] = None) -> CurveFamily:
    return CurveFamily(a, b, m, q)


def hermitian_type_preset(ell: int, r: int, m: int) -> CurveFamily:
    """The curve x^(ell^r + 1) = y^ell + y over F_{ell^(2r)}.

    Here ``a = ell``, ``b = ell^r + 1`` and the genus is ell^r (ell - 1) / 2.
    ``r = 1`` is the Hermitian curve.
    """
    if isinstance(r, bool) or not isinstance(r, int) or r <= 0 or r % 2 == 0:
        raise InvalidArgument(f"r must be an odd positive integer, got {r!r}")
    if isinstance(ell, bool) or not isinstance(ell, int) or not is_prime_power(ell):
        raise InvalidArgument(f"ell must be a prime power, got {ell!r}")
    return CurveFamily(ell, ell ** r + 1, m, ell ** (2 * r))


@dataclass(frozen=True)
class Monomial:
    """The function h^e_h * g_2^e_g[0] * ... * g_m^e_g[m-2]."""

    e_h: int
    e_g: tuple

    def __post_init__(self):
        object.__setattr__(self, "e_g", tuple(int(e) for e in self.e_g))
        if self.e_h < 0:
            raise InvalidArgument(f"exponent of h must be nonnegative, got {self.e_h}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.e_g) != len(other.e_g):
            raise InvalidArgument("monomials over different point sets")
        return Monomial(self.e_h + other.e_h, tuple(x + y for x, y in zip(self.e_g, other.e_g)))

    def __str__(self) -> str:
        parts = []
        if self.e_h:
            parts.append("h" if self.e_h == 1 else f"h^{self.e_h}")
        for j, e in enumerate(self.e_g, start=2):
            if e:
                parts.append(f"g{j}" if e == 1 else f"g{j}^{e}")
        return "*".join(parts) if parts else "1"


def pole_vector_h(c: CurveFamily) -> IntVec:
    return IntVec([c.a] + [-1] * (c.m - 1))


def pole_vector_g(c: CurveFamily, j: int) -> IntVec:
    """Pole vector of g_j, 2 <= j <= m."""
    if not 2 <= j <= c.m:
        raise InvalidArgument(f"g_j is defined for 2 <= j <= {c.m}, got j={j}")
    v = [0] * c.m
    v[0] = c.b
    v[j - 1] = -c.b
    return IntVec(v)


def pole_vector(c: CurveFamily, mono: Monomial) -> IntVec:
    """(-v_{P_1}(mono), ..., -v_{P_m}(mono)) by linearity of divisors."""
    if len(mono.e_g) != c.m - 1:
        raise InvalidArgument(f"monomial has {len(mono.e_g)} g-exponents, curve needs {c.m - 1}")
    v = mono.e_h * pole_vector_h(c)
    for j, e in enumerate(mono.e_g, start=2):
        if e:
            v = v + e * pole_vector_g(c, j)
    return v


def monomial_from_pole_vector(c: CurveFamily, beta: Sequence[int]) -> Monomial:
    """Inverse of :func:`pole_vector` on h-exponents in [0, b).

    Every element of the generating set is realised this way; the h-exponent
    is fixed by ``beta_2 mod b``.
    """
    beta = IntVec(beta)
    if len(beta) != c.m:
        raise InvalidArgument("length mismatch")
    e_h = (-beta[1]) % c.b
    # coordinate j: -e_h - b*e_j = beta_j
    e_g = []
    for j in range(2, c.m + 1):
        num = -beta[j - 1] - e_h
        if num % c.b:
            raise InvalidArgument(f"{beta} is not the pole vector of an h,g-monomial")
        e_g.append(num // c.b)
    mono = Monomial(e_h, tuple(e_g))
    if pole_vector(c, mono) != beta:
        raise InvalidArgument(f"{beta} is not the pole vector of an h,g-monomial")
    return mono
