"""Brute-force cross-checks for the closed forms.

Each routine answers a question from its definition rather than from the
floor-sum formulas: class counting over the enumerated generating set,
emptiness of the slices that define absolute maximality, and an exhaustive
minimum-norm search for the floor.  They are slow by design and meant for
small parameters.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional

import numpy as np

from .curve import CurveFamily, pole_vector
from .errors import CapExceeded, FloorUndefined, InvalidArgument, OracleFailure
from .lattice import IntVec, floor_div, leq, lub, norm
from .riemann_roch import dimension, dimension_many
from .semigroup import TypedElement, gamma_below

DEFAULT_BOX_VOLUME = 10 ** 6


@dataclass(frozen=True)
class BoxSpec:
    """Inclusive integer box ``lo <= beta <= hi``."""

    lo: IntVec
    hi: IntVec
    max_volume: int = DEFAULT_BOX_VOLUME

    def __post_init__(self):
        object.__setattr__(self, "lo", IntVec(self.lo))
        object.__setattr__(self, "hi", IntVec(self.hi))
        if len(self.lo) != len(self.hi):
            raise InvalidArgument("box corners have different lengths")
        if not leq(self.lo, self.hi):
            raise InvalidArgument(f"box corner {self.lo} is not <= {self.hi}")
        if self.volume > self.max_volume:
            raise CapExceeded(f"box of volume {self.volume} exceeds the limit {self.max_volume}")

    @property
    def volume(self) -> int:
        v = 1
        for l, h in zip(self.lo, self.hi):
            v *= h - l + 1
        return v

    @classmethod
    def below(cls, alpha, margin: int, max_volume: int = DEFAULT_BOX_VOLUME) -> "BoxSpec":
        alpha = IntVec(alpha)
        return cls(alpha - IntVec([margin] * len(alpha)), alpha, max_volume)

    def points(self) -> np.ndarray:
        axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(self.lo, self.hi)]
        grid = np.meshgrid(*axes, indexing="ij")
        return np.stack([g.ravel() for g in grid], axis=1)


def dim_by_class_counting(c: CurveFamily, alpha, j: int, cap: Optional[int] = None) -> int:
    """Number of distinct j-th coordinates among generating-set elements below alpha."""
    if not 1 <= j <= c.m:
        raise InvalidArgument(f"coordinate index {j} outside 1..{c.m}")
    return len({beta[j - 1] for beta in gamma_below(c, alpha, cap)})


def gamma_below_by_scan(c: CurveFamily, alpha) -> List[IntVec]:
    """Generating-set elements below alpha by scanning a loose parameter box.

    Candidates are realised as pole vectors of h,g-monomials and filtered with
    the product order, so no pruning bound from the enumerator is reused.
    """
    alpha = IntVec(alpha)
    a, b, m = c.a, c.b, c.m
    # d_j <= floor(alpha_j / b) for every index i >= 0
    upper = [floor_div(x, b) for x in alpha[1:]]
    # first coordinate <= alpha_1 bounds sum(d) below; take the weakest bound over all i
    sum_lo = min(-floor_div(alpha[0], b), (a + 1 - m) - floor_div(alpha[0] + a * (b - 1), b)) - 1
    ranges = []
    for j in range(m - 1):
        lo_j = sum_lo - (sum(upper) - upper[j])
        ranges.append(range(lo_j, upper[j] + 1))
    found = set()
    for i in range(b):
        for d in product(*ranges):
            beta = pole_vector(c, TypedElement(i, d).monomial(c))
            if leq(beta, alpha):
                found.add(beta)
    return sorted(found)


def member_by_generators(c: CurveFamily, alpha, cap: Optional[int] = None) -> bool:
    """alpha is a semigroup member iff it is the lub of the generators below it."""
    alpha = IntVec(alpha)
    below = gamma_below(c, alpha, cap)
    return bool(below) and lub(below) == alpha


def absolute_maximal_by_definition(c: CurveFamily, alpha, cap: Optional[int] = None) -> bool:
    """Check every slice nabla_J(alpha), J a nonempty proper subset, is empty.

    nabla_J(alpha) holds the members beta with beta_j = alpha_j on J and
    beta_i < alpha_i off J.  Such a beta exists iff for each j in J some
    generator below alpha - 1_{off J} reaches alpha_j in coordinate j (the lub
    of those generators is then a witness).
    """
    alpha = IntVec(alpha)
    m = c.m
    below = gamma_below(c, alpha, cap)
    if not below or lub(below) != alpha:
        return False
    idx = range(m)
    for size in range(1, m):
        for J in combinations(idx, size):
            off = [k for k in idx if k not in J]
            shrunk = [beta for beta in below if all(beta[k] < alpha[k] for k in off)]
            if all(any(beta[j] == alpha[j] for beta in shrunk) for j in J):
                return False
    return True


def discrepancy_by_counting(c: CurveFamily, alpha, i: int, j: int, cap: Optional[int] = None) -> bool:
    """Discrepancy test with every dimension obtained by class counting."""
    if i == j:
        raise InvalidArgument("discrepancy needs two distinct points")
    alpha = IntVec(alpha)
    ei, ej = IntVec.unit(c.m, i), IntVec.unit(c.m, j)

    def dim(v):
        return dim_by_class_counting(c, v, 1, cap)

    return dim(alpha) != dim(alpha - ej) and dim(alpha - ei) == dim(alpha - ei - ej)


def floor_by_exhaustion(
    c: CurveFamily,
    alpha,
    box: Optional[BoxSpec] = None,
    margin: Optional[int] = None,
    retries: int = 3,
) -> IntVec:
    """Unique minimum-norm beta <= alpha with the same dimension, by scanning a box.

    The default box is ``alpha - 2b <= beta <= alpha``.  When the minimiser
    touches the lower face the box is widened (margin doubled), at most
    ``retries`` times.
    """
    alpha = IntVec(alpha)
    if len(alpha) != c.m:
        raise InvalidArgument(f"alpha has length {len(alpha)}, curve has m={c.m}")
    target = dimension(c, alpha).total
    if target == 0:
        raise FloorUndefined(f"L(D_alpha) = 0 for alpha={alpha}; the floor is undefined")
    max_volume = box.max_volume if box is not None else DEFAULT_BOX_VOLUME
    if box is None:
        box = BoxSpec.below(alpha, 2 * c.b if margin is None else margin, max_volume)

    for _ in range(retries + 1):
        pts = box.points()
        pts = pts[np.all(pts <= np.asarray(alpha, dtype=np.int64), axis=1)]
        dims = dimension_many(c, pts)
        keep = pts[dims == target]
        if len(keep) == 0:
            raise OracleFailure(f"no point of the box has dimension {target}")
        norms = keep.sum(axis=1)
        best = keep[norms == norms.min()]
        if len(best) > 1:
            raise OracleFailure(f"{len(best)} vectors share the minimum norm below {alpha}")
        beta = IntVec(int(x) for x in best[0])
        if not any(x == l for x, l in zip(beta, box.lo)):
            assert norm(beta) == int(norms.min())
            return beta
        width = max(h - l for l, h in zip(box.lo, box.hi)) + 1
        box = BoxSpec(box.lo - IntVec([width] * c.m), box.hi, max_volume)
    raise OracleFailure(f"floor search for {alpha} still touches the box boundary")
