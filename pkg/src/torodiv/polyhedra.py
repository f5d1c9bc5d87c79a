"""Polyhedra with tracked recession cones and their homogenizations.

A ``TailedPolyhedron`` is ``conv(vertices) + pos(rays)`` stored purely in
V-representation; the H-representation, when needed (vertex redundancy
removal, exact point membership), is derived from the homogenization cone.
The recession cone must be pointed, otherwise the polyhedron has no
extreme points and cannot be represented here.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .cones import Cone
from .errors import StructuralError
from .linalg import (
    clear_denominators,
    dot,
    format_rational,
    parse_rational,
    primitive,
    rational_rank,
)


class _MinusInfinity:
    """Tagged minus infinity for support values of unbounded directions."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-infinity"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("minus infinity has no negation here")


NEG_INF = _MinusInfinity()


class TailedPolyhedron:
    """Nonempty polyhedron ``conv(vertices) + pos(rays)`` with pointed tail.

    The constructor canonicalizes: rays become the primitive extreme rays
    of the recession cone, vertices are reduced to the extreme points, and
    both lists are sorted. Instances are immutable.
    """

    __slots__ = ("rank", "vertices", "rays", "_tail", "_hcone")

    def __init__(self, rank, vertices, rays=()):
        if rank < 1:
            raise StructuralError(f"rank must be positive, got {rank}")
        verts = []
        seen = set()
        for v in vertices:
            tup = tuple(Fraction(x) for x in v)
            if len(tup) != rank:
                raise StructuralError(f"vertex {tup} has length {len(tup)}, expected rank {rank}")
            if tup not in seen:
                seen.add(tup)
                verts.append(tup)
        if not verts:
            raise StructuralError("a polyhedron needs at least one vertex")
        tail = Cone.from_generators(rank, rays)
        if not tail.is_pointed():
            raise StructuralError("recession cone contains a line; no vertex representation exists")

        hgens = [clear_denominators((1,) + v) for v in verts]
        hgens += [(0,) + r for r in tail.generators]
        hcone = Cone.from_generators(1 + rank, hgens)

        extreme = [v for v in verts if _is_extreme_point(v, hcone, rank)]
        if not extreme:
            raise StructuralError("no extreme points found; input vertices are malformed")

        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "vertices", tuple(sorted(extreme)))
        object.__setattr__(self, "rays", tail.generators)
        object.__setattr__(self, "_tail", tail)
        object.__setattr__(self, "_hcone", hcone)

    def __setattr__(self, name, value):
        raise AttributeError("TailedPolyhedron is immutable")

    @classmethod
    def trivial(cls, tail: Cone) -> "TailedPolyhedron":
        """The neutral coefficient: single vertex 0 with the tail's rays."""
        zero = tuple(Fraction(0) for _ in range(tail.rank))
        return cls(tail.rank, [zero], tail.generators)

    def tail_cone(self) -> Cone:
        return self._tail

    def homogenize(self) -> Cone:
        """Cone of rank 1+n generated by (1, vertex) and (0, ray) vectors."""
        return self._hcone

    def homogenization_dual(self) -> Cone:
        """Dual of the homogenization, built directly from halfspaces.

        Pairs (r, u) with <u, w> >= 0 for every ray w and r + <u, v> >= 0
        for every vertex v.
        """
        ineqs = [(0,) + w for w in self.rays]
        ineqs += [clear_denominators((1,) + v) for v in self.vertices]
        return Cone.from_inequalities(1 + self.rank, ineqs)

    def support_min(self, u):
        """min over the polyhedron of <u, .>, or NEG_INF if unbounded below."""
        if len(u) != self.rank:
            raise StructuralError(f"functional {tuple(u)} has length {len(u)}, expected rank {self.rank}")
        for r in self.rays:
            if dot(u, r) < 0:
                return NEG_INF
        return min(dot(u, v) for v in self.vertices)

    def minkowski(self, other: "TailedPolyhedron") -> "TailedPolyhedron":
        """Minkowski sum; all pairwise vertex sums, then redundancy removal."""
        if self.rank != other.rank:
            raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
        sums = {tuple(x + y for x, y in zip(v, w))
                for v in self.vertices for w in other.vertices}
        return TailedPolyhedron(self.rank, sorted(sums), list(self.rays) + list(other.rays))

    __add__ = minkowski

    def lattice_translate_of_tail(self):
        """The lattice point v with self == v + tail, if there is one."""
        if len(self.vertices) != 1:
            return None
        v = self.vertices[0]
        if any(x.denominator != 1 for x in v):
            return None
        return tuple(int(x) for x in v)

    def contains_point(self, x) -> bool:
        """Exact membership of a rational point, via the homogenization."""
        if len(x) != self.rank:
            raise StructuralError(f"point {tuple(x)} has length {len(x)}, expected rank {self.rank}")
        point = (Fraction(1),) + tuple(Fraction(c) for c in x)
        return all(dot(a, point) >= 0 for a in self._hcone.inequalities)

    def __eq__(self, other):
        if not isinstance(other, TailedPolyhedron):
            return NotImplemented
        return (self.rank == other.rank and self.vertices == other.vertices
                and self.rays == other.rays)

    def __hash__(self):
        return hash((self.rank, self.vertices, self.rays))

    def __repr__(self):
        verts = [[format_rational(x) for x in v] for v in self.vertices]
        return f"TailedPolyhedron(rank={self.rank}, vertices={verts}, rays={[list(r) for r in self.rays]})"

    def to_json_obj(self):
        return {
            "rank": self.rank,
            "vertices": [[format_rational(x) for x in v] for v in self.vertices],
            "rays": [list(r) for r in self.rays],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "TailedPolyhedron":
        if not isinstance(obj, dict) or "rank" not in obj or "vertices" not in obj:
            raise StructuralError(f"polyhedron object needs 'rank' and 'vertices': {obj!r}")
        rank = obj["rank"]
        if not isinstance(rank, int) or rank < 1:
            raise StructuralError(f"polyhedron rank must be a positive integer, got {rank!r}")
        verts = [tuple(parse_rational(x) for x in v) for v in obj["vertices"]]
        rays = []
        for r in obj.get("rays", []):
            if any(not isinstance(x, int) or isinstance(x, bool) for x in r):
                raise StructuralError(f"ray must be a list of integers: {r!r}")
            rays.append(tuple(r))
        return cls(rank, verts, rays)


def _is_extreme_point(v, hcone, rank):
    """Vertex test: the inequalities tight at v must have full-rank normal parts."""
    point = (Fraction(1),) + v
    tight = [a[1:] for a in hcone.inequalities if dot(a, point) == 0]
    return rational_rank(tight) == rank


def tail_cone(p: TailedPolyhedron) -> Cone:
    return p.tail_cone()


def minkowski_sum(a: TailedPolyhedron, b: TailedPolyhedron) -> TailedPolyhedron:
    return a.minkowski(b)


def support_min(u, p: TailedPolyhedron):
    return p.support_min(u)


def homogenize(p: TailedPolyhedron) -> Cone:
    return p.homogenize()


def homogenization_dual(p: TailedPolyhedron) -> Cone:
    return p.homogenization_dual()


def is_lattice_translate_of_tail(p: TailedPolyhedron):
    return p.lattice_translate_of_tail()


def floor_value(q) -> int:
    """Exact floor of a rational support value (finite ones only)."""
    if q is NEG_INF:
        raise StructuralError("cannot take the floor of minus infinity")
    return floor(q)
