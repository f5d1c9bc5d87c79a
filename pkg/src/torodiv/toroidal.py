"""Glued chart fans of polyhedral divisors and their cross-verification.

The fan of a divisor is a labeled family of cones in rank 1+n, one chart
per nontrivial marked point, all sharing the face (0, tail). There is no
global lattice embedding of the glued object, so the labeled-chart family
is the faithful finite encoding. ``verify_charts`` recomputes every chart
from scratch by semigroup enumeration and compares it against the
homogenized coefficient; the two routes share no geometry code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cones import Cone
from .divisors import PolyhedralDivisor
from .errors import DomainError, StabilizationError, StructuralError
from .semigroups import MonomialSemigroup, stable_semigroup_cone


def _zero_slice(cone: Cone) -> Cone:
    """Intersection with the hyperplane where the first coordinate vanishes."""
    e0 = (1,) + (0,) * (cone.rank - 1)
    hyper = Cone.from_inequalities(cone.rank, [e0, tuple(-x for x in e0)])
    return cone.intersect(hyper)


def _embedded_tail(tail: Cone) -> Cone:
    """The tail cone placed at height zero inside the rank-(1+n) lattice."""
    return Cone.from_generators(1 + tail.rank, [(0,) + g for g in tail.generators])


class GluedFan:
    """Chart cones glued along the shared face (0, tail)."""

    __slots__ = ("rank", "shared_face", "charts")

    def __init__(self, rank: int, shared_face: Cone, charts):
        if shared_face.rank != rank:
            raise StructuralError(f"shared face has rank {shared_face.rank}, expected {rank}")
        charts = dict(charts)
        for label, cone in charts.items():
            if cone.rank != rank:
                raise StructuralError(f"chart {label!r} has rank {cone.rank}, expected {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "shared_face", shared_face)
        object.__setattr__(self, "charts", charts)

    def __setattr__(self, name, value):
        raise AttributeError("GluedFan is immutable")

    def __repr__(self):
        return f"GluedFan(rank={self.rank}, charts={sorted(self.charts)})"

    def to_json_obj(self):
        return {
            "rank": self.rank,
            "shared_face": self.shared_face.to_json_obj(),
            "charts": {label: cone.to_json_obj() for label, cone in sorted(self.charts.items())},
        }

    @classmethod
    def from_json_obj(cls, obj) -> "GluedFan":
        if not isinstance(obj, dict):
            raise StructuralError("fan document must be a JSON object")
        for key in ("rank", "shared_face", "charts"):
            if key not in obj:
                raise StructuralError(f"fan document is missing {key!r}")
        return cls(obj["rank"], Cone.from_json_obj(obj["shared_face"]),
                   {label: Cone.from_json_obj(c) for label, c in obj["charts"].items()})


def fan_from_divisor(divisor: PolyhedralDivisor, keep_trivial=()) -> GluedFan:
    """Glue the homogenizations of the nontrivial coefficients into a fan.

    ``keep_trivial`` lists labels certified to carry the trivial
    coefficient (they contribute no chart); naming a nontrivial point
    there is a domain error. Every chart's zero-height slice is checked to
    equal the embedded tail at construction.
    """
    keep = set(keep_trivial)
    unknown = keep - set(divisor.base.labels)
    if unknown:
        raise DomainError(f"labels not on the base curve: {sorted(unknown)}")
    nontrivial = set(divisor.nontrivial_points())
    bad = keep & nontrivial
    if bad:
        raise DomainError(f"labels with nontrivial coefficients cannot be kept trivial: {sorted(bad)}")

    shared = _embedded_tail(divisor.tail)
    charts = {}
    for label in sorted(nontrivial - keep):
        chart = divisor.coefficients[label].homogenize()
        slice_cone = _zero_slice(chart)
        if slice_cone != shared:
            raise StructuralError(
                f"chart at {label!r} violates the gluing invariant: zero slice "
                f"{slice_cone.generators} differs from the embedded tail {shared.generators}")
        charts[label] = chart
    return GluedFan(1 + divisor.rank, shared, charts)


def split_product_points(divisor: PolyhedralDivisor):
    """Partition the marked points by whether the chart is a product.

    A point whose coefficient is a lattice translate of the tail has chart
    cone isomorphic to tail x halfline; those are the ``product`` points
    and the canonical embedding keeps only the rest (``essential``).
    """
    product, essential = [], []
    for label in sorted(divisor.coefficients):
        if divisor.coefficients[label].lattice_translate_of_tail() is not None:
            product.append(label)
        else:
            essential.append(label)
    return product, essential


@dataclass(frozen=True)
class ChartVerdict:
    verdict: str  # "equal" | "unequal" | "undetermined"
    rhs: Cone
    lhs: Cone | None = None
    box_used: int | None = None
    detail: str = ""

    def to_json_obj(self):
        return {
            "verdict": self.verdict,
            "equal": self.verdict == "equal" if self.verdict != "undetermined" else None,
            "lhs": self.lhs.to_json_obj() if self.lhs is not None else None,
            "rhs": self.rhs.to_json_obj(),
            "box_used": self.box_used,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    overall: bool
    box_cap: int
    points: dict[str, ChartVerdict] = field(default_factory=dict)

    def to_json_obj(self):
        return {
            "overall": self.overall,
            "box_cap": self.box_cap,
            "points": {label: v.to_json_obj() for label, v in sorted(self.points.items())},
        }


def verify_charts(divisor: PolyhedralDivisor, box_cap: int = 12) -> VerificationReport:
    """Cross-check every chart cone by two independent computations.

    For each nontrivial point, the left side reconstructs the chart from a
    stabilized box enumeration of the monomial semigroup; the right side is
    the homogenization of the coefficient. A stabilization cap produces an
    explicit "undetermined" verdict, never a silent pass.
    """
    verdicts = {}
    for label in divisor.nontrivial_points():
        poly = divisor.coefficients[label]
        rhs = poly.homogenize()
        try:
            lhs, box = stable_semigroup_cone(MonomialSemigroup(poly), box_cap)
        except StabilizationError as exc:
            verdicts[label] = ChartVerdict("undetermined", rhs, None, None, str(exc))
            continue
        verdict = "equal" if lhs == rhs else "unequal"
        verdicts[label] = ChartVerdict(verdict, rhs, lhs, box)
    overall = all(v.verdict == "equal" for v in verdicts.values())
    return VerificationReport(overall, box_cap, verdicts)


def fan_isomorphic(a: GluedFan, b: GluedFan) -> bool:
    """Label-matched comparison: same labels, equal shared faces and charts."""
    if a.rank != b.rank:
        return False
    if set(a.charts) != set(b.charts):
        return False
    if a.shared_face != b.shared_face:
        return False
    return all(a.charts[label] == b.charts[label] for label in a.charts)
