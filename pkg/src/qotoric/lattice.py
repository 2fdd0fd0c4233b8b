"""Lattices with rational coordinates, Hermite normal forms and rational cones.

Vectors are plain tuples of :class:`fractions.Fraction`.  Lattices with
fractional coordinates are handled by clearing denominators, computing over
the integers and scaling back, so every normal form below is integral.

Cones are stored canonically: the primitive extreme rays of their pointed
part plus a reduced basis of their lineality space.  Two cones are equal iff
their canonical data are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from . import _linalg
from .errors import DimensionTooLarge, NotASublattice, RankMismatch

RationalVector = tuple[Fraction, ...]

MAX_RANK = 4


def vector(coords: Iterable) -> RationalVector:
    """Build a rational vector from ints, Fractions or ``"p/q"`` strings."""
    return tuple(Fraction(c) for c in coords)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def add(u, v) -> RationalVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> RationalVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u) -> RationalVector:
    return tuple(c * a for a in u)


def unit_vector(i: int, d: int) -> RationalVector:
    return tuple(Fraction(int(j == i)) for j in range(d))


def common_denominator(vectors: Iterable[Sequence[Fraction]]) -> int:
    return reduce(lcm, (Fraction(x).denominator for v in vectors for x in v), 1)


def primitive(v: Sequence) -> tuple[int, ...]:
    """The primitive integer vector pointing in the direction of ``v``."""
    m = common_denominator([v])
    ints = [int(Fraction(x) * m) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(x // g for x in ints)


def leq(u, v) -> bool:
    """Coordinatewise ``u <= v``."""
    return all(a <= b for a, b in zip(u, v))


# -- Hermite normal form ---------------------------------------------------

def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H = U @ matrix``, ``U`` unimodular, ``H`` in
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)`` and zero rows at the bottom.
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if A else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def axpy(i, q, j):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            swap(p, r)
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    axpy(i, A[i][c] // A[r][c], r)
                    clean = clean and A[i][c] == 0
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            axpy(i, A[i][c] // A[r][c], r)
        r += 1
    return A, U


# -- lattices --------------------------------------------------------------

@dataclass(frozen=True)
class Sublattice:
    """A lattice in Q^d, stored by its canonical (Hermite-reduced) basis."""

    ambient_rank: int
    basis: tuple[RationalVector, ...]

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], ambient_rank: int) -> Sublattice:
        gens = [vector(g) for g in generators]
        for g in gens:
            if len(g) != ambient_rank:
                raise RankMismatch(f"vector {g} is not in Q^{ambient_rank}")
        if not gens:
            return cls(ambient_rank, ())
        m = common_denominator(gens)
        H, _ = hermite_normal_form([[int(x * m) for x in g] for g in gens])
        basis = tuple(tuple(Fraction(x, m) for x in row) for row in H if any(row))
        return cls(ambient_rank, basis)

    @classmethod
    def standard(cls, d: int) -> Sublattice:
        return cls.from_generators([unit_vector(i, d) for i in range(d)], d)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        """Rational coordinates of ``v`` in the canonical basis, or None if
        ``v`` is outside the span."""
        residual = list(vector(v))
        coords = []
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x != 0)
            c = residual[p] / row[p]
            coords.append(c)
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        return coords

    def __contains__(self, v) -> bool:
        return lattice_member(v, self)

    def __add__(self, other: Sublattice) -> Sublattice:
        return Sublattice.from_generators(self.basis + other.basis, self.ambient_rank)

    def dual(self) -> Sublattice:
        """``{n : <n, u> in Z for all u}``; only defined for full rank."""
        if self.rank != self.ambient_rank:
            raise RankMismatch("dual lattice needs a full-rank lattice")
        inv = _linalg.inverse([list(b) for b in self.basis])
        # rows of (B^-1)^T are the columns of B^-1
        cols = [tuple(inv[i][j] for i in range(self.rank)) for j in range(self.rank)]
        return Sublattice.from_generators(cols, self.ambient_rank)

    def primitive_on_ray(self, direction: Sequence) -> RationalVector:
        """The shortest nonzero lattice vector on the ray through ``direction``."""
        coords = self.coordinates(direction)
        if coords is None:
            raise NotASublattice(f"{tuple(direction)} is not in the span of the lattice")
        c = primitive(coords)
        return tuple(sum((ci * b[k] for ci, b in zip(c, self.basis)), Fraction(0))
                     for k in range(self.ambient_rank))


def lattice_member(v: Sequence, L: Sublattice) -> bool:
    """True iff ``v`` is an integer combination of the basis of ``L``."""
    if len(v) != L.ambient_rank:
        raise RankMismatch("vector and lattice live in different ambient spaces")
    coords = L.coordinates(v)
    return coords is not None and all(c.denominator == 1 for c in coords)


def lattice_index(sub: Sublattice, sup: Sublattice) -> int:
    """The index ``[sup : sub]``."""
    if sub.ambient_rank != sup.ambient_rank or sub.rank != sup.rank:
        raise RankMismatch(f"ranks {sub.rank} and {sup.rank} differ")
    rows = []
    for b in sub.basis:
        if not lattice_member(b, sup):
            raise NotASublattice(f"{b} is not in the larger lattice")
        rows.append(sup.coordinates(b))
    if not rows:
        return 1
    return abs(int(_linalg.det(rows)))


# -- cones -----------------------------------------------------------------

def _reduced_basis(rows, d) -> tuple[tuple[int, ...], ...]:
    """Canonical integer basis of a rational subspace (scaled RREF rows)."""
    if not rows:
        return ()
    R, _ = _linalg.rref(rows, d)
    return tuple(primitive(r) for r in R)


@lru_cache(maxsize=65536)
def _cone_from_inequalities(A: tuple[tuple[int, ...], ...], d: int):
    """Canonical data of ``{w : <a, w> >= 0 for every row a}``.

    Returns ``(rays, lineality)``: the primitive extreme rays of the pointed
    part, which lives in the row space of A, and a canonical basis of the
    kernel of A.  Extreme rays are found by enumerating (r-1)-subsets of
    active constraints, r being the rank of A.
    """
    A = [list(map(Fraction, a)) for a in A]
    lineality = _reduced_basis(_linalg.nullspace(A, d), d) if A else _reduced_basis(
        [unit_vector(i, d) for i in range(d)], d)
    R, _ = _linalg.rref(A, d)
    r = len(R)
    if r == 0:
        return (), lineality
    AR = [[dot(a, Rk) for Rk in R] for a in A]
    rays = set()
    for S in combinations(range(len(A)), r - 1):
        block = [AR[i] for i in S]
        if r > 1 and _linalg.rank(block, r) != r - 1:
            continue
        t = _linalg.nullspace(block, r)[0] if r > 1 else [Fraction(1)]
        w = [sum((tk * Rk[j] for tk, Rk in zip(t, R)), Fraction(0)) for j in range(d)]
        values = [dot(a, w) for a in A]
        if all(x >= 0 for x in values):
            rays.add(primitive(w))
        elif all(x <= 0 for x in values):
            rays.add(primitive([-x for x in w]))
    return tuple(sorted(rays)), lineality


def _int_rows(vectors) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({primitive(v) for v in vectors if any(v)}))


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone in canonical form.

    ``rays`` are the primitive extreme rays of the pointed part (the
    projection onto the orthogonal complement of the lineality space) and
    ``lineality`` is a reduced integer basis of the lineality space.
    """

    ambient_rank: int
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], ambient_rank: int) -> Cone:
        if not 1 <= ambient_rank <= MAX_RANK:
            raise DimensionTooLarge(f"cones are supported in ranks 1..{MAX_RANK}")
        gens = _int_rows(vector(g) for g in generators)
        dual_rays, dual_lin = _cone_from_inequalities(gens, ambient_rank)
        dual_gens = _int_rows(list(dual_rays) + list(dual_lin) + [[-x for x in l] for l in dual_lin])
        rays, lin = _cone_from_inequalities(dual_gens, ambient_rank)
        return cls(ambient_rank, rays, lin)

    @classmethod
    def from_inequalities(cls, normals: Iterable[Sequence], ambient_rank: int) -> Cone:
        """The cone ``{w : <a, w> >= 0}`` cut out by the given normals."""
        rays, lin = _cone_from_inequalities(_int_rows(vector(a) for a in normals), ambient_rank)
        return cls(ambient_rank, rays, lin)

    @classmethod
    def orthant(cls, d: int) -> Cone:
        return cls.from_generators([unit_vector(i, d) for i in range(d)], d)

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        neg = tuple(tuple(-x for x in l) for l in self.lineality)
        return tuple(sorted(self.rays + self.lineality + neg))

    @property
    def dim(self) -> int:
        return _linalg.rank([list(map(Fraction, g)) for g in self.generators], self.ambient_rank)

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    def dual(self) -> Cone:
        return dual_cone(self)

    def interior_point(self) -> RationalVector:
        """A point of the relative interior (sum of the pointed rays)."""
        return tuple(Fraction(sum(col)) for col in zip(*self.rays)) if self.rays \
            else tuple(Fraction(0) for _ in range(self.ambient_rank))

    def __contains__(self, v) -> bool:
        return cone_contains(self, v)

    def facets(self) -> list[Cone]:
        out = []
        for w in self.dual().rays:
            on = [r for r in self.rays if dot(w, r) == 0]
            out.append(Cone.from_generators(on + list(self.generators_of_lineality()), self.ambient_rank))
        return out

    def generators_of_lineality(self):
        return self.lineality + tuple(tuple(-x for x in l) for l in self.lineality)

    def faces(self) -> list[Cone]:
        """All faces, including ``self`` and the minimal face."""
        seen = {self}
        frontier = [self]
        while frontier:
            nxt = []
            for c in frontier:
                for f in c.facets():
                    if f not in seen:
                        seen.add(f)
                        nxt.append(f)
            frontier = nxt
        return sorted(seen, key=Cone.sort_key)

    def sort_key(self):
        return (self.dim, self.rays, self.lineality)

    def intersection(self, other: Cone) -> Cone:
        normals = list(self.dual().generators) + list(other.dual().generators)
        return Cone.from_inequalities(normals, self.ambient_rank)


def dual_cone(c: Cone) -> Cone:
    """``{w : <w, u> >= 0 for all u in c}``."""
    rays, lin = _cone_from_inequalities(c.generators, c.ambient_rank)
    return Cone(c.ambient_rank, rays, lin)


def cone_contains(c: Cone, v: Sequence, strict: bool = False) -> bool:
    """Membership of ``v`` in ``c``; with ``strict`` test the relative interior."""
    if len(v) != c.ambient_rank:
        raise RankMismatch("vector and cone live in different ambient spaces")
    D = dual_cone(c)
    if any(dot(l, v) != 0 for l in D.lineality):
        return False
    if strict:
        return all(dot(w, v) > 0 for w in D.rays)
    return all(dot(w, v) >= 0 for w in D.rays)


def is_strictly_convex(c: Cone) -> bool:
    """True iff the cone contains no line."""
    return not any(cone_contains(c, [-x for x in g]) for g in c.generators)
