"""Generalised Weierstrass semigroups and Riemann-Roch spaces on curves f(y) = g(x).

Everything is exact integer arithmetic on pole vectors in Z^m::

    >>> from weierstrass import hermitian_type_preset, dimension, supported_floor
    >>> c = hermitian_type_preset(3, 3, 3)          # x^28 = y^3 + y
    >>> dimension(c, (8, 7, -1)).total
    2
    >>> supported_floor(c, (8, 7, -1))
    IntVec((6, -1, -1))
"""
from .curve import (
    CurveFamily,
    Monomial,
    SmallFieldWarning,
    hermitian_type_preset,
    new_curve,
    pole_vector,
)
from .errors import (
    CapExceeded,
    CurveError,
    FloorUndefined,
    InvalidArgument,
    LatticeOverflowError,
    OracleFailure,
    WeierstrassError,
)
from .lattice import IntVec, floor_div, leq, lub, norm
from .oracle import (
    BoxSpec,
    absolute_maximal_by_definition,
    dim_by_class_counting,
    floor_by_exhaustion,
)
from .riemann_roch import (
    DimensionBreakdown,
    basis,
    dimension,
    dimension_full_support,
    dimension_many,
    full_floor,
    supported_floor,
)
from .semigroup import (
    GeneratorData,
    TypedElement,
    element_of,
    gamma_below,
    generating_data,
    is_absolute_maximal,
    is_discrepancy,
    is_member,
)

__all__ = [
    "BoxSpec",
    "CapExceeded",
    "CurveError",
    "CurveFamily",
    "DimensionBreakdown",
    "FloorUndefined",
    "GeneratorData",
    "IntVec",
    "InvalidArgument",
    "LatticeOverflowError",
    "Monomial",
    "OracleFailure",
    "SmallFieldWarning",
    "TypedElement",
    "WeierstrassError",
    "absolute_maximal_by_definition",
    "basis",
    "dim_by_class_counting",
    "dimension",
    "dimension_full_support",
    "dimension_many",
    "element_of",
    "floor_by_exhaustion",
    "floor_div",
    "full_floor",
    "gamma_below",
    "generating_data",
    "hermitian_type_preset",
    "is_absolute_maximal",
    "is_discrepancy",
    "is_member",
    "leq",
    "lub",
    "new_curve",
    "norm",
    "pole_vector",
    "supported_floor",
]
