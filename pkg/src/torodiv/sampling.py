"""Random instance generation for fuzz verification and property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .cones import Cone
from .divisors import BaseCurve, CurveKind, CurvePoint, PolyhedralDivisor
from .linalg import is_zero
from .polyhedra import TailedPolyhedron


def random_cone(rng: random.Random, rank: int, max_entry: int = 2, max_gens: int = 4) -> Cone:
    """Cone spanned by a few random integer vectors (possibly the zero cone)."""
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        v = tuple(rng.randint(-max_entry, max_entry) for _ in range(rank))
        if not is_zero(v):
            gens.append(v)
    return Cone.from_generators(rank, gens)


def random_pointed_cone(rng: random.Random, rank: int, max_entry: int = 2, max_gens: int = 3) -> Cone:
    while True:
        c = random_cone(rng, rank, max_entry, max_gens)
        if c.is_pointed():
            return c


def random_coefficient(rng: random.Random, tail: Cone, max_coord: int = 2,
                       max_denominator: int = 2, max_vertices: int = 3) -> TailedPolyhedron:
    """Random polyhedron with the given tail; vertex coords in [-max_coord, max_coord]."""
    nverts = rng.randint(1, max_vertices)
    verts = []
    for _ in range(nverts):
        coords = []
        for _ in range(tail.rank):
            d = rng.randint(1, max_denominator)
            coords.append(Fraction(rng.randint(-max_coord * d, max_coord * d), d))
        verts.append(tuple(coords))
    return TailedPolyhedron(tail.rank, verts, tail.generators)


def random_divisor(rng: random.Random, rank: int | None = None, max_points: int = 3,
                   max_coord: int = 2, max_denominator: int = 2) -> PolyhedralDivisor:
    """Random divisor on an affine line (always proper there)."""
    if rank is None:
        rank = rng.randint(1, 2)
    tail = random_pointed_cone(rng, rank)
    npoints = rng.randint(1, max_points)
    points = [CurvePoint(str(i), Fraction(i)) for i in range(npoints)]
    base = BaseCurve(CurveKind.AFFINE_LINE, points)
    coeffs = {}
    for p in points:
        coeffs[p.label] = random_coefficient(rng, tail, max_coord, max_denominator)
    return PolyhedralDivisor(base, rank, tail, coeffs)


def random_weight(rng: random.Random, divisor: PolyhedralDivisor, max_entry: int = 3):
    """Random lattice weight inside the dual of the divisor's tail cone."""
    while True:
        u = tuple(rng.randint(-max_entry, max_entry) for _ in range(divisor.rank))
        if divisor.weight_dual.contains(u):
            return u
