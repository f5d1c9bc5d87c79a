"""Exact rational polyhedral computations for complexity-one torus actions.

The package evaluates polyhedral divisors on marked curves, homogenizes
their coefficient polyhedra into cones one rank higher, assembles the
glued chart fan, and cross-checks every chart against an independent
lattice-point enumeration of the corresponding monomial semigroup. All
arithmetic is exact rational; there is no tolerance anywhere.
"""

from .cones import Cone, cone_equal, dual, intersect
from .divisors import (
    BaseCurve,
    CurveKind,
    CurvePoint,
    PolyhedralDivisor,
    PropernessReport,
    degree,
)
from .errors import DomainError, StabilizationError, StructuralError
from .polyhedra import (
    NEG_INF,
    TailedPolyhedron,
    homogenization_dual,
    homogenize,
    is_lattice_translate_of_tail,
    minkowski_sum,
    support_min,
    tail_cone,
)
from .semigroups import (
    HilbertBasis,
    MonomialSemigroup,
    cone_from_semigroup_sample,
    graded_piece_exponent,
    hilbert_basis,
    semigroup_member,
    stable_semigroup_cone,
)
from .toroidal import (
    ChartVerdict,
    GluedFan,
    VerificationReport,
    fan_from_divisor,
    fan_isomorphic,
    split_product_points,
    verify_charts,
)

__all__ = [
    "BaseCurve",
    "ChartVerdict",
    "Cone",
    "CurveKind",
    "CurvePoint",
    "DomainError",
    "GluedFan",
    "HilbertBasis",
    "MonomialSemigroup",
    "NEG_INF",
    "PolyhedralDivisor",
    "PropernessReport",
    "StabilizationError",
    "StructuralError",
    "TailedPolyhedron",
    "VerificationReport",
    "cone_equal",
    "cone_from_semigroup_sample",
    "degree",
    "dual",
    "fan_from_divisor",
    "fan_isomorphic",
    "graded_piece_exponent",
    "hilbert_basis",
    "homogenization_dual",
    "homogenize",
    "intersect",
    "is_lattice_translate_of_tail",
    "minkowski_sum",
    "semigroup_member",
    "split_product_points",
    "stable_semigroup_cone",
    "support_min",
    "tail_cone",
    "verify_charts",
]

__version__ = "0.1.0"
