"""Monomial semigroups of coefficient polyhedra, Hilbert bases, and the
enumeration-based reconstruction of chart cones.

For a coefficient polyhedron D with tail S in rank n, the associated
semigroup lives in rank 1+n and contains (k, u) exactly when u is
nonnegative on every tail ray and k >= -min<u, D>. Both clauses reduce to
integer inequalities once vertex denominators are cleared, so box
enumeration is exact and fast. ``cone_from_semigroup_sample`` dualizes the
cone spanned by a box sample without ever touching the homogenization
code path; growing the box until two consecutive answers agree yields an
independent computation of the chart cone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone
from .errors import StabilizationError, StructuralError
from .linalg import IntVec, clear_denominators, dot, is_zero, neg, point_rep_mod, primitive, row_hnf
from .polyhedra import TailedPolyhedron, floor_value


class MonomialSemigroup:
    """Lattice semigroup {(k, u) : u in dual tail, k >= -min<u, D>}."""

    __slots__ = ("rank", "polyhedron", "weight_dual", "_tail_rays", "_cleared_vertices")

    def __init__(self, polyhedron: TailedPolyhedron):
        object.__setattr__(self, "rank", 1 + polyhedron.rank)
        object.__setattr__(self, "polyhedron", polyhedron)
        object.__setattr__(self, "weight_dual", polyhedron.tail_cone().dual())
        object.__setattr__(self, "_tail_rays", polyhedron.rays)
        # (d, d*v) per vertex v: then k >= -<u, v>  <=>  d*k + <u, d*v> >= 0
        cleared = []
        for v in polyhedron.vertices:
            w = clear_denominators((1,) + v)
            cleared.append((w[0], w[1:]))
        object.__setattr__(self, "_cleared_vertices", tuple(cleared))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialSemigroup is immutable")

    def contains(self, point) -> bool:
        """Exact membership of a lattice point (k, u)."""
        if len(point) != self.rank:
            raise StructuralError(f"point {tuple(point)} has length {len(point)}, expected rank {self.rank}")
        k, u = point[0], point[1:]
        # weight must lie in the dual of the tail cone
        for ray in self._tail_rays:
            if dot(u, ray) < 0:
                return False
        # height must clear the support minimum at every vertex
        for d, w in self._cleared_vertices:
            if d * k + dot(u, w) < 0:
                return False
        return True

    __contains__ = contains

    def contains_floor_rule(self, point) -> bool:
        """Membership using k >= -floor(min<u, D>); agrees on lattice points."""
        if len(point) != self.rank:
            raise StructuralError(f"point {tuple(point)} has length {len(point)}, expected rank {self.rank}")
        k, u = point[0], point[1:]
        for ray in self._tail_rays:
            if dot(u, ray) < 0:
                return False
        return k >= -floor_value(self.polyhedron.support_min(u))

    def members_in_box(self, bound):
        """All lattice points of [-bound, bound]^rank in the semigroup."""
        rng = range(-bound, bound + 1)
        return [p for p in itertools.product(rng, repeat=self.rank) if self.contains(p)]


def semigroup_member(s: MonomialSemigroup, point) -> bool:
    return s.contains(point)


@dataclass(frozen=True)
class HilbertBasis:
    """Irreducible generators found inside a coordinate box.

    ``elements`` is sorted lexicographically: for a semigroup with units
    (invertible lattice directions) it holds canonical representatives of
    the irreducible non-unit classes plus a +/- Hermite basis of the unit
    lattice. ``complete`` certifies that every semigroup point in the box
    decomposes over the elements; when it is False, ``witness`` is a box
    member that failed (or None when the box was too small to enumerate).
    """

    elements: tuple[IntVec, ...]
    box: int
    complete: bool
    witness: IntVec | None = None

    def to_json_obj(self):
        return {
            "box": self.box,
            "elements": [list(e) for e in self.elements],
            "complete": self.complete,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def hilbert_basis(s: MonomialSemigroup, box: int) -> HilbertBasis:
    """Irreducible semigroup elements within [-box, box]^rank.

    Exhaustive enumeration plus pairwise irreducibility filtering; no
    project-and-lift machinery. Units (elements whose negative is also a
    member) are reported through a +/- lattice basis, and irreducibility of
    the rest is taken modulo the unit lattice.
    """
    if box < 1:
        return HilbertBasis((), box, False, None)

    members = s.members_in_box(box)
    member_set = set(members)
    nonzero = [m for m in members if not is_zero(m)]
    unit_set = {m for m in nonzero if s.contains(neg(m))}
    unit_hnf = row_hnf(sorted(unit_set), s.rank)

    def is_unit(x):
        return s.contains(x) and s.contains(neg(x))

    non_units = [m for m in nonzero if m not in unit_set]
    irreducible = []
    for x in non_units:
        reducible = False
        for y in non_units:
            z = tuple(a - b for a, b in zip(x, y))
            if is_zero(z) or not s.contains(z) or is_unit(z):
                continue
            reducible = True
            break
        if not reducible:
            irreducible.append(x)

    classes = sorted({point_rep_mod(x, unit_hnf) for x in irreducible})
    elements = list(classes)
    for b in unit_hnf:
        elements.append(b)
        elements.append(neg(b))
    elements = tuple(sorted(elements))

    complete, witness = _certify_decompositions(s, members, classes, unit_hnf, box)
    return HilbertBasis(elements, box, complete, witness)


def _certify_decompositions(s, members, classes, unit_hnf, box):
    """Check that every box member is a nonnegative sum of basis elements.

    Works modulo the unit lattice: a member decomposes iff its canonical
    class rep reaches zero by repeatedly subtracting irreducible class
    reps while staying in the semigroup. Conservative: unreachable or
    out-of-range states report incompleteness, never a false pass.
    """
    cap = 8 * box + 8
    memo: dict[IntVec, bool] = {}

    def decomposes(x) -> bool:
        if is_zero(x):
            return True
        if x in memo:
            return memo[x]
        if any(abs(c) > cap for c in x):
            return False
        memo[x] = False  # cycle guard
        for b in classes:
            z = tuple(a - c for a, c in zip(x, b))
            if not s.contains(z):
                continue
            if decomposes(point_rep_mod(z, unit_hnf)):
                memo[x] = True
                return True
        return memo[x]

    for m in members:
        if not decomposes(point_rep_mod(m, unit_hnf)):
            return False, m
    return True, None


def graded_piece_exponent(divisor, label: str, u) -> int:
    """Exponent of the local parameter generating the weight-u piece over
    the ring of the punctured neighborhood: -floor(min <u, coefficient>)."""
    divisor._check_weight(u)
    return -floor_value(divisor.coefficient(label).support_min(u))


def cone_from_semigroup_sample(s: MonomialSemigroup, box: int) -> Cone:
    """Dual, in Z x N, of the cone spanned by a box sample of the semigroup.

    Pure enumeration; this never inspects the homogenization of the
    defining polyhedron, so it is an independent route to the chart cone.
    Callers compare growing boxes for stabilization.
    """
    spanned = _spanned_sample_cone(s, box)
    return spanned.dual()


def _spanned_sample_cone(s: MonomialSemigroup, box: int) -> Cone:
    directions = {primitive(m) for m in s.members_in_box(box) if not is_zero(m)}
    return Cone.from_generators(s.rank, sorted(directions))


def _functional_valid_on_semigroup(s: MonomialSemigroup, row) -> bool:
    """Exact test: is <row, .> nonnegative on the entire semigroup?

    Works from the defining data alone (tail rays and vertices). Writing
    row = (h, u'), validity needs h >= 0 (the height direction lies in the
    semigroup) and min over the dual tail of max over vertices v of
    <u' - h*v, .> to be nonnegative; the latter fails exactly when the
    subcone of the dual tail where every <u' - h*v, .> <= 0 holds contains
    a point making all of them strictly negative, which is decided at a
    relative-interior point (the sum of the subcone's generators).
    """
    h, up = row[0], row[1:]
    if h < 0:
        return False
    cs = []
    for v in s.polyhedron.vertices:
        c = tuple(Fraction(x) - h * y for x, y in zip(up, v))
        if all(x == 0 for x in c):
            return True
        cs.append(c)
    if not cs:
        return True
    n = s.rank - 1
    ineqs = list(s._tail_rays) + [clear_denominators(neg(c)) for c in cs]
    region = Cone.from_inequalities(n, ineqs)
    probe = tuple(sum(g[i] for g in region.generators) for i in range(n)) \
        if region.generators else tuple(0 for _ in range(n))
    return not all(dot(c, probe) < 0 for c in cs)


def _sample_cone_certified(s: MonomialSemigroup, spanned: Cone) -> bool:
    """True when the sampled cone provably equals the full semigroup cone.

    The sample always spans a subcone, so equality holds exactly when each
    facet functional of the sampled cone is valid on the whole semigroup.
    """
    return all(_functional_valid_on_semigroup(s, row) for row in spanned.inequalities)


def stable_semigroup_cone(s: MonomialSemigroup, box_cap: int, start: int = 1):
    """Grow the sample box until the answer stabilizes, with a certificate.

    Accepts at the first box where the sampled cone agrees with the next
    box's and every facet functional of the sample is valid on the whole
    semigroup (consecutive agreement alone can plateau below the limit).
    Returns (cone, box); raises StabilizationError when box+1 would exceed
    the cap. The spanned cone is finitely generated, so a large enough cap
    always terminates.
    """
    if box_cap < start + 1:
        raise StabilizationError(box_cap, f"cap allows no comparison (needs at least {start + 1})")
    prev = _spanned_sample_cone(s, start)
    for box in range(start + 1, box_cap + 1):
        cur = _spanned_sample_cone(s, box)
        if cur == prev and _sample_cone_certified(s, prev):
            return prev.dual(), box - 1
        prev = cur
    raise StabilizationError(box_cap, f"sample cone still growing at box {box_cap}")
