"""Rational polyhedral cones with exact duality.

A ``Cone`` stores two canonical descriptions of one set of points:

* ``generators`` -- the primitive extreme rays; when the cone contains
  lines, the extreme rays of the pointed quotient (reduced to canonical
  representatives) together with a +/- Hermite basis of the lineality
  space;
* ``inequalities`` -- the canonical generators of the dual cone, each row
  ``a`` read as the halfspace ``<a, x> >= 0``.

Conversion between the two runs the double description method over exact
integers, rescaling to primitive vectors after every step, so duality is a
literal swap of the two fields and ``dual(dual(c))`` is ``c`` on the nose.
Equality of cones is set equality (mutual containment), which the
canonical form turns into structural equality of the generator tuples.
"""

from __future__ import annotations

from .errors import StructuralError
from .linalg import (
    IntVec,
    dot,
    is_zero,
    neg,
    primitive,
    primitive_from_rational,
    rational_rank,
    ray_rep_mod,
    subspace_lattice_basis,
)


def _clean_int_vectors(rank, vectors, what):
    """Validate ranks, primitivize, drop zero vectors and duplicates."""
    out = []
    seen = set()
    for v in vectors:
        tup = tuple(v)
        if len(tup) != rank:
            raise StructuralError(f"{what} {tup} has length {len(tup)}, expected rank {rank}")
        if any(not isinstance(x, int) or isinstance(x, bool) for x in tup):
            tup = primitive_from_rational(tup) if not is_zero(tup) else tup
        if is_zero(tup):
            continue
        tup = primitive(tup)
        if tup not in seen:
            seen.add(tup)
            out.append(tup)
    return out


def _double_description(rank, ineqs):
    """Extreme rays and lineality basis of ``{x : <a, x> >= 0 for a in ineqs}``.

    Incremental double description: the state is a lineality basis plus the
    extreme rays of the pointed quotient, each ray carrying the set of
    already-processed inequalities that vanish on it (used for the
    combinatorial adjacency test).
    """
    lines = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    rays: list[tuple[IntVec, frozenset]] = []

    for idx, a in enumerate(ineqs):
        line_vals = [dot(a, l) for l in lines]
        if any(line_vals):
            i0 = next(i for i, v in enumerate(line_vals) if v != 0)
            l0, v0 = lines[i0], line_vals[i0]
            if v0 < 0:
                l0, v0 = neg(l0), -v0
            new_lines = []
            for i, (l, v) in enumerate(zip(lines, line_vals)):
                if i == i0:
                    continue
                new_lines.append(l if v == 0 else primitive(tuple(x * v0 - y * v for x, y in zip(l, l0))))
            new_rays = []
            for vec, zeros in rays:
                v = dot(a, vec)
                w = vec if v == 0 else primitive(tuple(x * v0 - y * v for x, y in zip(vec, l0)))
                new_rays.append((w, zeros | {idx}))
            new_rays.append((l0, frozenset(range(idx))))
            lines = new_lines
            rays = new_rays
            continue

        vals = [dot(a, vec) for vec, _ in rays]
        if all(v >= 0 for v in vals):
            rays = [(vec, zeros | {idx} if v == 0 else zeros)
                    for (vec, zeros), v in zip(rays, vals)]
            continue

        pos = [(vec, zeros, v) for (vec, zeros), v in zip(rays, vals) if v > 0]
        zero = [(vec, zeros | {idx}) for (vec, zeros), v in zip(rays, vals) if v == 0]
        negs = [(vec, zeros, v) for (vec, zeros), v in zip(rays, vals) if v < 0]
        kept = [(vec, zeros) for vec, zeros, _ in pos] + zero
        new = []
        new_seen = set()
        for pvec, pz, pv in pos:
            for nvec, nz, nv in negs:
                common = pz & nz
                # combinatorial adjacency: no third extreme ray is tight on
                # everything both of these are tight on
                adjacent = True
                for vec, zeros in rays:
                    if vec == pvec or vec == nvec:
                        continue
                    if common <= zeros:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = primitive(tuple(pv * x - nv * y for x, y in zip(nvec, pvec)))
                if w not in new_seen:
                    new_seen.add(w)
                    new.append((w, common | {idx}))
        rays = kept + new

    return [vec for vec, _ in rays], lines


def _canonical_generators(rank, rays, lines):
    """Sorted canonical generator tuple from a raw V-representation."""
    basis = subspace_lattice_basis(lines, rank)
    reps = set()
    for r in rays:
        rep = ray_rep_mod(r, basis)
        reps.add(rep)
    gens = list(reps)
    for b in basis:
        gens.append(b)
        gens.append(neg(b))
    return tuple(sorted(gens))


class Cone:
    """Rational polyhedral cone in a fixed-rank lattice.

    Construct with :meth:`from_generators` or :meth:`from_inequalities`;
    instances are immutable and safe to share between threads.
    """

    __slots__ = ("rank", "generators", "inequalities")

    def __init__(self, rank, generators, inequalities):
        # internal: callers must pass mutually dual canonical tuples
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "inequalities", inequalities)

    def __setattr__(self, name, value):
        raise AttributeError("Cone is immutable")

    @classmethod
    def from_generators(cls, rank, generators) -> "Cone":
        """Cone positively spanned by the given vectors (empty list: zero cone)."""
        if rank < 1:
            raise StructuralError(f"rank must be positive, got {rank}")
        gens = _clean_int_vectors(rank, generators, "generator")
        dual_rays, dual_lines = _double_description(rank, gens)
        ineqs = _canonical_generators(rank, dual_rays, dual_lines)
        rays, lines = _double_description(rank, ineqs)
        canon = _canonical_generators(rank, rays, lines)
        return cls(rank, canon, ineqs)

    @classmethod
    def from_inequalities(cls, rank, inequalities) -> "Cone":
        """Cone cut out by halfspaces ``<a, x> >= 0`` (empty list: full space)."""
        if rank < 1:
            raise StructuralError(f"rank must be positive, got {rank}")
        ineqs_raw = _clean_int_vectors(rank, inequalities, "inequality")
        rays, lines = _double_description(rank, ineqs_raw)
        gens = _canonical_generators(rank, rays, lines)
        dual_rays, dual_lines = _double_description(rank, gens)
        ineqs = _canonical_generators(rank, dual_rays, dual_lines)
        return cls(rank, gens, ineqs)

    @classmethod
    def zero(cls, rank) -> "Cone":
        return cls.from_generators(rank, [])

    @classmethod
    def full_space(cls, rank) -> "Cone":
        return cls.from_inequalities(rank, [])

    def dual(self) -> "Cone":
        """The cone of functionals nonnegative on this cone."""
        return Cone(self.rank, self.inequalities, self.generators)

    def contains(self, v) -> bool:
        """Exact membership via the inequality description (int or Fraction entries)."""
        if len(v) != self.rank:
            raise StructuralError(f"vector {tuple(v)} has length {len(v)}, expected rank {self.rank}")
        return all(dot(a, v) >= 0 for a in self.inequalities)

    def contains_cone(self, other) -> bool:
        if self.rank != other.rank:
            raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
        return all(self.contains(g) for g in other.generators)

    def intersect(self, other) -> "Cone":
        """Intersection, computed from the concatenated inequalities."""
        if self.rank != other.rank:
            raise StructuralError(f"rank mismatch: {self.rank} vs {other.rank}")
        return Cone.from_inequalities(self.rank, list(self.inequalities) + list(other.inequalities))

    def is_pointed(self) -> bool:
        """True iff the cone contains no line."""
        return not any(self.contains(neg(g)) for g in self.generators)

    def is_full_dimensional(self) -> bool:
        return rational_rank(self.generators) == self.rank

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return cone_equal(self, other)

    def __hash__(self):
        return hash((self.rank, self.generators))

    def __repr__(self):
        return f"Cone(rank={self.rank}, generators={[list(g) for g in self.generators]})"

    def to_json_obj(self):
        return {"rank": self.rank, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json_obj(cls, obj) -> "Cone":
        if not isinstance(obj, dict) or "rank" not in obj or "generators" not in obj:
            raise StructuralError(f"cone object needs 'rank' and 'generators': {obj!r}")
        rank = obj["rank"]
        if not isinstance(rank, int) or rank < 1:
            raise StructuralError(f"cone rank must be a positive integer, got {rank!r}")
        gens = obj["generators"]
        if not isinstance(gens, list):
            raise StructuralError("cone generators must be a list of integer vectors")
        for g in gens:
            if not isinstance(g, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in g):
                raise StructuralError(f"cone generator must be a list of integers: {g!r}")
        return cls.from_generators(rank, [tuple(g) for g in gens])


def cone_equal(a: Cone, b: Cone) -> bool:
    """Set equality through mutual containment (representations are not unique)."""
    if a.rank != b.rank:
        raise StructuralError(f"rank mismatch: {a.rank} vs {b.rank}")
    return a.contains_cone(b) and b.contains_cone(a)


def dual(c: Cone) -> Cone:
    return c.dual()


def intersect(a: Cone, b: Cone) -> Cone:
    return a.intersect(b)


def contains(c: Cone, v) -> bool:
    return c.contains(v)


def is_pointed(c: Cone) -> bool:
    return c.is_pointed()


def is_full_dimensional(c: Cone) -> bool:
    return c.is_full_dimensional()
