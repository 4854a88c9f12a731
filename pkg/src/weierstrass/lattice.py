"""Exact integer vectors in Z^m.

Vectors are immutable tuples of Python ints, range-checked against the signed
64-bit window so that an overflow surfaces as an error instead of a silently
wrong answer.
"""
from __future__ import annotations

from typing import Iterable

from .errors import InvalidArgument, LatticeOverflowError

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def checked(x: int) -> int:
    """Return ``x`` unchanged, raising if it leaves the int64 range."""
    if not INT64_MIN <= x <= INT64_MAX:
        raise LatticeOverflowError(f"integer {x} does not fit in 64 bits")
    return x


def floor_div(n: int, d: int) -> int:
    """Floor of ``n / d`` for positive ``d`` (rounds toward minus infinity).

    >>> floor_div(-1, 28)
    -1
    """
    if d <= 0:
        raise InvalidArgument(f"divisor must be positive, got {d}")
    return n // d


class IntVec(tuple):
    """An element of Z^m, m >= 2.

    ``+``, ``-`` and unary ``-`` are coordinate-wise; ``k * v`` scales.
    Lengths must agree for every binary operation.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]):
        coords = tuple(coords)
        if len(coords) < 2:
            raise InvalidArgument(f"vectors need length >= 2, got {len(coords)}")
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, int):
                try:
                    ok = int(c) == c
                except (TypeError, ValueError):
                    ok = False
                if not ok:
                    raise InvalidArgument(f"non-integer coordinate {c!r}")
            checked(int(c))
        return super().__new__(cls, (int(c) for c in coords))

    @classmethod
    def zero(cls, m: int) -> "IntVec":
        return cls([0] * m)

    @classmethod
    def unit(cls, m: int, j: int) -> "IntVec":
        """The standard basis vector e_j, with ``j`` 1-based."""
        if not 1 <= j <= m:
            raise InvalidArgument(f"index {j} outside 1..{m}")
        return cls(1 if k == j else 0 for k in range(1, m + 1))

    @classmethod
    def ones(cls, m: int) -> "IntVec":
        return cls([1] * m)

    @property
    def m(self) -> int:
        return len(self)

    def _same_length(self, other) -> "IntVec":
        if not isinstance(other, IntVec):
            other = IntVec(other)
        if len(other) != len(self):
            raise InvalidArgument(f"length mismatch: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other):
        other = self._same_length(other)
        return IntVec(x + y for x, y in zip(self, other))

    def __sub__(self, other):
        other = self._same_length(other)
        return IntVec(x - y for x, y in zip(self, other))

    def __neg__(self):
        return IntVec(-x for x in self)

    def __mul__(self, k: int):
        return IntVec(k * x for x in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"IntVec({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


def as_vec(v) -> IntVec:
    return v if isinstance(v, IntVec) else IntVec(v)


def leq(u, v) -> bool:
    """Product order: True iff ``u_j <= v_j`` for every j."""
    u, v = as_vec(u), as_vec(v)
    u._same_length(v)
    return all(x <= y for x, y in zip(u, v))


def lub(vectors: Iterable) -> IntVec:
    """Coordinate-wise maximum of a nonempty finite set of vectors."""
    vs = [as_vec(v) for v in vectors]
    if not vs:
        raise InvalidArgument("lub of an empty set is undefined")
    first = vs[0]
    for v in vs[1:]:
        first._same_length(v)
    return IntVec(max(col) for col in zip(*vs))


def norm(v) -> int:
    """Sum of coordinates, i.e. the degree of the divisor with these coefficients."""
    return checked(sum(as_vec(v)))
