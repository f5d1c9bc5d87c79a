"""Exact integer and rational vector arithmetic.

Vectors are plain tuples: lattice vectors hold ints, rational vectors hold
Fractions. Every comparison in the package is exact; nothing here (or
anywhere else) uses floating point or a tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def dot(a, b):
    """Scalar product of two equal-length vectors (int or Fraction entries)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def scale(s, a):
    return tuple(s * x for x in a)


def is_zero(a) -> bool:
    return all(x == 0 for x in a)


def primitive(v) -> IntVec:
    """Divide an integer vector by the gcd of its entries.

    The direction is preserved (the divisor is positive). Raises on the
    zero vector, which has no primitive representative.
    """
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def primitive_from_rational(v) -> IntVec:
    """Primitive integer vector in the direction of a rational vector."""
    entries = [Fraction(x) for x in v]
    m = lcm(*(x.denominator for x in entries)) if entries else 1
    return primitive(tuple(int(x * m) for x in entries))


def clear_denominators(v) -> IntVec:
    """Smallest positive integer multiple of a rational vector that is integral."""
    entries = [Fraction(x) for x in v]
    m = lcm(*(x.denominator for x in entries)) if entries else 1
    return tuple(int(x * m) for x in entries)


def rational_rank(rows) -> int:
    """Rank of a matrix given as an iterable of equal-length rows."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / prow[col]
                mat[i] = [x - f * y for x, y in zip(mat[i], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _echelon_int(rows, ncols_reduce):
    """Integer row echelon on the leading block via Euclidean row combinations.

    Returns (matrix, n_pivots); rows at index >= n_pivots have zeros in the
    first ncols_reduce columns.
    """
    mat = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols_reduce):
        while True:
            live = [i for i in range(pivot_row, len(mat)) if mat[i][col] != 0]
            if not live:
                break
            if len(live) == 1:
                i = live[0]
                mat[pivot_row], mat[i] = mat[i], mat[pivot_row]
                pivot_row += 1
                break
            live.sort(key=lambda i: abs(mat[i][col]))
            p = live[0]
            for i in live[1:]:
                q = mat[i][col] // mat[p][col]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[p])]
    return mat, pivot_row


def row_hnf(rows, width) -> list[IntVec]:
    """Canonical Hermite basis of the lattice generated by integer rows.

    Pivots are positive and strictly increase by column; entries above a
    pivot are reduced into [0, pivot). The result depends only on the
    lattice, not on the presentation.
    """
    mat = [list(r) for r in rows if not is_zero(r)]
    basis: list[list[int]] = []
    for col in range(width):
        while True:
            live = [r for r in mat if r[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            for r in live[1:]:
                q = r[col] // p[col]
                if q:
                    for k in range(col, width):
                        r[k] -= q * p[k]
        live = [r for r in mat if r[col] != 0]
        if live:
            p = live[0]
            mat.remove(p)
            if p[col] < 0:
                p = [-x for x in p]
            basis.append(p)
        mat = [r for r in mat if not is_zero(r)]
    # reduce entries above each pivot
    for i in range(len(basis)):
        pcol = next(k for k, x in enumerate(basis[i]) if x != 0)
        for j in range(i):
            q = basis[j][pcol] // basis[i][pcol]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return [tuple(r) for r in basis]


def integer_kernel(vectors, rank) -> list[IntVec]:
    """Basis of the saturated lattice {x in Z^rank : <x, v> = 0 for all v}."""
    vecs = [v for v in vectors if not is_zero(v)]
    if not vecs:
        return [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    m = len(vecs)
    rows = []
    for i in range(rank):
        rows.append([vecs[j][i] for j in range(m)] + [1 if k == i else 0 for k in range(rank)])
    mat, n_pivots = _echelon_int(rows, m)
    kernel = [tuple(r[m:]) for r in mat[n_pivots:]]
    return row_hnf(kernel, rank)


def subspace_lattice_basis(vectors, rank) -> list[IntVec]:
    """Canonical basis of span_Q(vectors) intersected with Z^rank.

    Computed as the kernel of the kernel, which saturates automatically.
    """
    vecs = [v for v in vectors if not is_zero(v)]
    if not vecs:
        return []
    return integer_kernel(integer_kernel(vecs, rank), rank)


def ray_rep_mod(v, hnf_rows) -> IntVec:
    """Canonical primitive representative of a ray direction modulo a lattice.

    Zeroes the pivot coordinates of the (canonical HNF) lattice basis using
    positive rescaling only, so the ray class is preserved.
    """
    w = list(v)
    for h in hnf_rows:
        j = next(k for k, x in enumerate(h) if x != 0)
        if w[j]:
            p = h[j]
            w = [wi * p - hi * w[j] for wi, hi in zip(w, h)]
    return primitive(w)


def point_rep_mod(x, hnf_rows) -> IntVec:
    """Canonical representative of a lattice point modulo a lattice (HNF basis)."""
    w = list(x)
    for h in hnf_rows:
        j = next(k for k, v in enumerate(h) if v != 0)
        q = w[j] // h[j]
        if q:
            w = [wi - q * hi for wi, hi in zip(w, h)]
    return tuple(w)


def parse_rational(s) -> Fraction:
    """Parse "p/q" or bare integer strings (ints pass through unchanged)."""
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    if not isinstance(s, str):
        raise ValueError(f"not a rational: {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {s!r}") from exc


def format_rational(q) -> str:
    """Lowest-terms string form: "p/q" with q > 1, else the bare integer."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
