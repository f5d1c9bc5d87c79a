"""Polyhedral divisors on marked curves.

A divisor assigns a tailed polyhedron (all sharing one pointed tail cone)
to finitely many labeled points of a base curve; unlisted points carry the
trivial coefficient, which is the tail cone itself. The base curve is
purely combinatorial: a label set plus a kind, where the kind only decides
completeness (for the positivity check) and whether the label "∞" is
legal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone
from .errors import DomainError, StructuralError
from .linalg import dot, format_rational, parse_rational
from .polyhedra import NEG_INF, TailedPolyhedron, floor_value

INFINITY_LABEL = "∞"


class CurveKind(enum.Enum):
    AFFINE_LINE = "affine_line"
    PROJECTIVE_LINE = "projective_line"
    ABSTRACT_AFFINE = "abstract_affine"
    ABSTRACT_COMPLETE = "abstract_complete"

    @property
    def is_complete(self) -> bool:
        return self in (CurveKind.PROJECTIVE_LINE, CurveKind.ABSTRACT_COMPLETE)

    @property
    def has_coordinates(self) -> bool:
        return self in (CurveKind.AFFINE_LINE, CurveKind.PROJECTIVE_LINE)


@dataclass(frozen=True)
class CurvePoint:
    label: str
    coordinate: Fraction | None = None


class BaseCurve:
    """A marked curve: a kind plus a list of distinct point labels."""

    __slots__ = ("kind", "points")

    def __init__(self, kind: CurveKind, points):
        pts = tuple(points)
        labels = [p.label for p in pts]
        if len(set(labels)) != len(labels):
            raise StructuralError(f"duplicate point labels: {labels}")
        coords = [p.coordinate for p in pts if p.coordinate is not None]
        if len(set(coords)) != len(coords):
            raise StructuralError("duplicate point coordinates")
        for p in pts:
            if p.label == INFINITY_LABEL and kind is not CurveKind.PROJECTIVE_LINE:
                raise StructuralError(f"label {INFINITY_LABEL!r} is only legal on a projective line")
            if p.coordinate is not None and not kind.has_coordinates:
                raise StructuralError(f"point {p.label!r} carries a coordinate on an abstract curve")
            if p.coordinate is not None and p.label == INFINITY_LABEL:
                raise StructuralError("the point at infinity has no affine coordinate")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "points", pts)

    def __setattr__(self, name, value):
        raise AttributeError("BaseCurve is immutable")

    @property
    def labels(self):
        return tuple(p.label for p in self.points)

    def __eq__(self, other):
        if not isinstance(other, BaseCurve):
            return NotImplemented
        return self.kind == other.kind and self.points == other.points

    def __hash__(self):
        return hash((self.kind, self.points))

    def __repr__(self):
        return f"BaseCurve({self.kind.value}, points={list(self.labels)})"

    def to_json_obj(self):
        pts = []
        for p in self.points:
            entry = {"label": p.label}
            if p.coordinate is not None:
                entry["coordinate"] = format_rational(p.coordinate)
            pts.append(entry)
        return {"kind": self.kind.value, "points": pts}

    @classmethod
    def from_json_obj(cls, obj) -> "BaseCurve":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise StructuralError(f"base curve object needs a 'kind': {obj!r}")
        try:
            kind = CurveKind(obj["kind"])
        except ValueError:
            valid = ", ".join(k.value for k in CurveKind)
            raise StructuralError(f"unknown curve kind {obj['kind']!r}; expected one of {valid}") from None
        points = []
        for entry in obj.get("points", []):
            if not isinstance(entry, dict) or "label" not in entry:
                raise StructuralError(f"curve point needs a 'label': {entry!r}")
            coord = entry.get("coordinate")
            points.append(CurvePoint(str(entry["label"]),
                                     parse_rational(coord) if coord is not None else None))
        return cls(kind, points)


@dataclass(frozen=True)
class PropernessReport:
    proper: bool | str  # True or "inconclusive"; this check never claims False
    reasons: tuple[str, ...] = ()

    def to_json_obj(self):
        return {"proper": self.proper, "reasons": list(self.reasons)}


class PolyhedralDivisor:
    """Finitely many point -> polyhedron coefficients over one tail cone."""

    __slots__ = ("base", "rank", "tail", "coefficients", "_weight_dual")

    def __init__(self, base: BaseCurve, rank: int, tail: Cone, coefficients):
        if rank < 1:
            raise StructuralError(f"rank must be positive, got {rank}")
        if tail.rank != rank:
            raise StructuralError(f"tail cone has rank {tail.rank}, expected {rank}")
        if not tail.is_pointed():
            raise StructuralError("tail cone must be pointed")
        coeffs = dict(coefficients)
        known = set(base.labels)
        for label, poly in coeffs.items():
            if label not in known:
                raise StructuralError(f"coefficient at unknown point {label!r}")
            if poly.rank != rank:
                raise StructuralError(f"coefficient at {label!r} has rank {poly.rank}, expected {rank}")
            if poly.tail_cone() != tail:
                raise StructuralError(f"coefficient at {label!r} has a different tail cone")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "_weight_dual", tail.dual())

    def __setattr__(self, name, value):
        raise AttributeError("PolyhedralDivisor is immutable")

    @property
    def weight_dual(self) -> Cone:
        """The dual of the tail cone; evaluation weights must lie in it."""
        return self._weight_dual

    @property
    def trivial_coefficient(self) -> TailedPolyhedron:
        return TailedPolyhedron.trivial(self.tail)

    def coefficient(self, label: str) -> TailedPolyhedron:
        """Coefficient at a marked point; unlisted labels are rejected."""
        if label not in self.base.labels:
            raise DomainError(f"unknown point label {label!r}")
        return self.coefficients.get(label, self.trivial_coefficient)

    def nontrivial_points(self):
        trivial = self.trivial_coefficient
        return tuple(sorted(label for label, poly in self.coefficients.items() if poly != trivial))

    def _check_weight(self, u):
        if len(u) != self.rank:
            raise StructuralError(f"weight {tuple(u)} has length {len(u)}, expected rank {self.rank}")
        for ray in self.tail.generators:
            if dot(u, ray) < 0:
                raise DomainError(
                    f"weight {tuple(u)} is negative on tail ray {ray}; it lies outside the dual of the tail cone")

    def evaluate(self, u) -> dict[str, Fraction]:
        """The rational divisor u -> sum over points of min <u, coefficient>."""
        self._check_weight(u)
        out = {}
        for label in self.nontrivial_points():
            value = self.coefficients[label].support_min(u)
            assert value is not NEG_INF
            if value != 0:
                out[label] = value
        return out

    def evaluate_floor(self, u) -> dict[str, int]:
        """Coefficient-wise floor of evaluate, zeros dropped."""
        self._check_weight(u)
        out = {}
        for label in self.nontrivial_points():
            value = floor_value(self.coefficients[label].support_min(u))
            if value != 0:
                out[label] = value
        return out

    def degree_polyhedron(self) -> TailedPolyhedron:
        """Minkowski sum of all nontrivial coefficients (trivial one if none)."""
        total = self.trivial_coefficient
        for label in self.nontrivial_points():
            total = total + self.coefficients[label]
        return total

    def check_proper(self) -> PropernessReport:
        """Positivity check: on affine bases always proper; on complete bases
        proper when the degree polyhedron is strictly contained in the tail,
        otherwise inconclusive (the full criterion on complete curves lives in
        the polyhedral-divisor literature and is not reimplemented here)."""
        if not self.base.kind.is_complete:
            return PropernessReport(True, ())
        total = self.degree_polyhedron()
        sigma = self.tail
        outside = [v for v in total.vertices if not sigma.contains(v)]
        outside_rays = [r for r in total.rays if not sigma.contains(r)]
        if outside or outside_rays:
            reasons = ["degree polyhedron is not contained in the tail cone"]
            for v in outside[:1]:
                reasons.append(f"vertex ({', '.join(format_rational(x) for x in v)}) lies outside")
            for r in outside_rays[:1]:
                reasons.append(f"ray {r} lies outside")
            reasons.append("strict containment fails; the full criterion on complete curves "
                           "is the positivity condition of the polyhedral-divisor literature")
            return PropernessReport("inconclusive", tuple(reasons))
        if total == self.trivial_coefficient:
            return PropernessReport("inconclusive", (
                "degree polyhedron equals the tail cone, so strict containment fails",
                "the full criterion on complete curves is the positivity condition "
                "of the polyhedral-divisor literature"))
        return PropernessReport(True, ())

    def trivial_locus(self):
        """Marked points with explicitly trivial coefficient, plus the flag
        that every unmarked point is trivial (always true in this model)."""
        trivial = self.trivial_coefficient
        explicit = sorted(label for label, poly in self.coefficients.items() if poly == trivial)
        return explicit, True

    def __eq__(self, other):
        if not isinstance(other, PolyhedralDivisor):
            return NotImplemented
        return (self.base == other.base and self.rank == other.rank
                and self.tail == other.tail and self.coefficients == other.coefficients)

    def __repr__(self):
        return (f"PolyhedralDivisor(base={self.base!r}, rank={self.rank}, "
                f"points={sorted(self.coefficients)})")

    def to_json_obj(self):
        return {
            "base": self.base.to_json_obj(),
            "rank": self.rank,
            "tail": self.tail.to_json_obj(),
            "coefficients": {label: poly.to_json_obj()
                             for label, poly in sorted(self.coefficients.items())},
        }

    @classmethod
    def from_json_obj(cls, obj) -> "PolyhedralDivisor":
        if not isinstance(obj, dict):
            raise StructuralError("divisor document must be a JSON object")
        for key in ("base", "rank", "tail", "coefficients"):
            if key not in obj:
                raise StructuralError(f"divisor document is missing {key!r}")
        base = BaseCurve.from_json_obj(obj["base"])
        rank = obj["rank"]
        tail = Cone.from_json_obj(obj["tail"])
        coeffs = obj["coefficients"]
        if not isinstance(coeffs, dict):
            raise StructuralError("'coefficients' must map labels to polyhedra")
        parsed = {label: TailedPolyhedron.from_json_obj(p) for label, p in coeffs.items()}
        return cls(base, rank, tail, parsed)


def degree(q: dict[str, Fraction]) -> Fraction:
    """Sum of the coefficients of a rational divisor."""
    return sum(q.values(), Fraction(0))


def qdivisor_to_json_obj(q) -> dict:
    return {label: format_rational(value) for label, value in q.items()}
