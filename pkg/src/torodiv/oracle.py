"""Brute-force reference computations for the test suite.

Everything here is deliberately slow and written as separate literal
loops, duplicating no geometry from the main modules: the value of these
functions is that they can disagree with the fast paths. Rank is capped
at 3 by box-enumeration feasibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cones import Cone
from .errors import StructuralError
from .linalg import IntVec
from .polyhedra import NEG_INF, TailedPolyhedron


@dataclass(frozen=True)
class BoxSample:
    """All lattice points of [-bound, bound]^rank passing a predicate."""

    rank: int
    bound: int
    points: tuple[IntVec, ...]


def box_sample(rank: int, bound: int, predicate) -> BoxSample:
    rng = range(-bound, bound + 1)
    pts = tuple(p for p in itertools.product(rng, repeat=rank) if predicate(p))
    return BoxSample(rank, bound, pts)


def _is_primitive(v) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def oracle_dual_normals(c: Cone, bound: int) -> list[IntVec]:
    """Primitive integer vectors in the box nonnegative on every generator.

    This is the oracle's testimony: the lattice directions of the dual
    cone, found by exhaustive search with literal loops.
    """
    found = []
    for a in itertools.product(range(-bound, bound + 1), repeat=c.rank):
        if not _is_primitive(a):
            continue
        ok = True
        for g in c.generators:
            s = 0
            for x, y in zip(a, g):
                s += x * y
            if s < 0:
                ok = False
                break
        if ok:
            found.append(a)
    return sorted(found)


def oracle_dual(c: Cone, bound: int) -> Cone:
    """Dual cone spanned by the enumerated normals.

    The enumeration is independent; the final reduction to extreme
    generators is done by the cone constructor. Callers check
    stabilization by growing the bound until the answer repeats.
    """
    return Cone.from_generators(c.rank, oracle_dual_normals(c, bound))


def oracle_support_min(u, p: TailedPolyhedron):
    """Reference for support minimization: two independent literal scans."""
    if len(u) != p.rank:
        raise StructuralError(f"functional {tuple(u)} has length {len(u)}, expected rank {p.rank}")
    for r in p.rays:
        s = 0
        for x, y in zip(u, r):
            s += x * y
        if s < 0:
            return NEG_INF
    best = None
    for v in p.vertices:
        s = Fraction(0)
        for x, y in zip(u, v):
            s += x * y
        if best is None or s < best:
            best = s
    return best


def oracle_minkowski_membership(a: TailedPolyhedron, b: TailedPolyhedron, x,
                                grid_denominator: int, separation_bound: int = 3):
    """Decide x in a+b by grid search over decompositions x = y + z.

    Returns True when a decomposition is found (verified exactly against
    the summands' inequality descriptions), False when a separating
    functional in [-separation_bound, separation_bound]^rank certifies
    x outside, and the string "inconclusive" otherwise: a coarse grid is
    reported, never silently treated as an answer.
    """
    if a.rank != b.rank or len(x) != a.rank:
        raise StructuralError("rank mismatch between summands and probe point")
    x = tuple(Fraction(c) for c in x)

    # separation: <u, x> below the additive support minimum proves x outside
    for u in itertools.product(range(-separation_bound, separation_bound + 1), repeat=a.rank):
        ma = oracle_support_min(u, a)
        mb = oracle_support_min(u, b)
        if ma is NEG_INF or mb is NEG_INF:
            continue
        s = Fraction(0)
        for c, w in zip(x, u):
            s += c * w
        if s < ma + mb:
            return False

    # probe region: bounding box of a's vertices, padded along its rays
    los = [min(v[i] for v in a.vertices) for i in range(a.rank)]
    his = [max(v[i] for v in a.vertices) for i in range(a.rank)]
    if a.rays:
        reach = max(abs(c) for c in x) + max(abs(c) for v in a.vertices for c in v) \
            + max(abs(c) for v in b.vertices for c in v) + 1
        for r in a.rays:
            for i in range(a.rank):
                if r[i] > 0:
                    his[i] += reach
                elif r[i] < 0:
                    los[i] -= reach

    d = grid_denominator
    axes = []
    for i in range(a.rank):
        start = int(los[i] * d) - 1 if los[i] * d != int(los[i] * d) else int(los[i] * d)
        stop = int(his[i] * d) + 1
        axes.append([Fraction(k, d) for k in range(start, stop + 1)])
    for y in itertools.product(*axes):
        z = tuple(c - w for c, w in zip(x, y))
        if a.contains_point(y) and b.contains_point(z):
            return True
    return "inconclusive"
