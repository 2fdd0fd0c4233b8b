"""Integral polyhedra ``conv(I) + C``, their faces and dual Newton diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EmptySupport, UnboundedDirection
from .lattice import (
    Cone,
    RationalVector,
    Sublattice,
    cone_contains,
    dot,
    dual_cone,
    is_strictly_convex,
    sub,
    vector,
)


@dataclass(frozen=True)
class IntegralPolyhedron:
    """The polyhedron ``conv(points) + recession``.

    ``vertices`` is the subset of ``points`` that are vertices.
    """

    points: tuple[RationalVector, ...]
    recession: Cone
    vertices: tuple[RationalVector, ...]

    @property
    def ambient_rank(self) -> int:
        return self.recession.ambient_rank


@dataclass(frozen=True)
class Fan:
    cones: tuple[Cone, ...]
    support: Cone

    @property
    def maximal_cones(self) -> list[Cone]:
        d = self.support.dim
        return [c for c in self.cones if c.dim == d]

    def edges(self) -> list[Cone]:
        return [c for c in self.cones if c.dim == 1]

    def validate(self) -> None:
        """Raise ValueError unless this is a fan subdividing ``support``."""
        listed = set(self.cones)
        for c in self.cones:
            if not is_strictly_convex(c):
                raise ValueError(f"{c} is not strictly convex")
            for g in c.generators:
                if not cone_contains(self.support, g):
                    raise ValueError(f"{c} leaves the support")
            for f in c.faces():
                if f not in listed:
                    raise ValueError(f"face {f} of {c} is missing")
        for a, b in combinations(self.cones, 2):
            meet = a.intersection(b)
            if meet not in a.faces() or meet not in b.faces():
                raise ValueError(f"{a} and {b} do not meet in a common face")
        # every facet of a maximal cone is shared with another maximal cone
        # or lies on the boundary of the support
        maximal = self.maximal_cones
        boundary_normals = dual_cone(self.support).rays
        for c in maximal:
            for f in c.facets():
                holders = sum(1 for other in maximal if f in other.faces())
                on_boundary = any(all(dot(w, r) == 0 for r in f.rays) for w in boundary_normals)
                if holders == 2 or (holders == 1 and on_boundary):
                    continue
                raise ValueError(f"facet {f} of {c} breaks the subdivision")


def separating_weight(p: Sequence, others: Iterable[Sequence], recession: Cone) -> RationalVector | None:
    """A weight minimised on ``conv(others + [p]) + recession`` only at ``p``.

    Returns None when no such weight exists, i.e. when ``p`` lies in
    ``conv(others) + recession``.  By Gordan's alternative the strict system
    ``<w, q - p> > 0, <w, r> > 0`` is solvable iff those vectors span a
    strictly convex cone, and then any interior point of its dual works.
    """
    p = vector(p)
    d = recession.ambient_rank
    rows = [sub(vector(q), p) for q in others]
    rows = [r for r in rows if any(r)]
    rows += [vector(g) for g in recession.generators]
    if not rows:
        return tuple(Fraction(0) for _ in range(d))
    c = Cone.from_generators(rows, d)
    if not is_strictly_convex(c):
        return None
    return dual_cone(c).interior_point()


def polyhedron_from_support(I: Iterable[Sequence], recession: Cone) -> IntegralPolyhedron:
    points = sorted({vector(p) for p in I})
    if not points:
        raise EmptySupport("a Newton polyhedron needs at least one point")
    for p in points:
        if len(p) != recession.ambient_rank:
            raise ValueError(f"point {p} is not in the ambient space of the recession cone")
    # points in another point's translate of the recession cone are never vertices
    candidates = [p for p in points
                  if not any(q != p and cone_contains(recession, sub(p, q)) for q in points)]
    vertices = tuple(
        p for p in candidates
        if separating_weight(p, [q for q in candidates if q != p], recession) is not None
    )
    return IntegralPolyhedron(tuple(points), recession, vertices)


def polyhedron_contains(P: IntegralPolyhedron, x: Sequence) -> bool:
    """Exact membership of ``x`` in ``P``."""
    return separating_weight(x, P.vertices, P.recession) is None


def face_of(P: IntegralPolyhedron, eta: Sequence) -> tuple[RationalVector, ...]:
    """The points of the generating set minimising ``<eta, .>``."""
    eta = vector(eta)
    if not cone_contains(dual_cone(P.recession), eta):
        raise UnboundedDirection(f"{eta} is unbounded below on the polyhedron")
    values = [dot(eta, p) for p in P.points]
    low = min(values)
    return tuple(p for p, v in zip(P.points, values) if v == low)


def face_is_compact(P: IntegralPolyhedron, eta: Sequence) -> bool:
    return cone_contains(dual_cone(P.recession), vector(eta), strict=True)


def dual_newton_diagram(P: IntegralPolyhedron, sigma: Cone) -> Fan:
    """The subdivision of ``sigma`` by cones of weights sharing a minimal face.

    The maximal cones are the normal cones of the vertices; every other cone
    of the subdivision is a face of one of them.
    """
    if not is_strictly_convex(sigma) or not sigma.is_full_dimensional():
        raise ValueError("sigma must be strictly convex and full-dimensional")
    if dual_cone(sigma) != P.recession:
        raise ValueError("the recession cone of P must be the dual of sigma")
    sigma_normals = list(P.recession.generators)
    maximal = []
    for v in P.vertices:
        normals = sigma_normals + [sub(q, v) for q in P.vertices if q != v]
        maximal.append(Cone.from_inequalities(normals, sigma.ambient_rank))
    cones = set()
    for c in maximal:
        cones.update(c.faces())
    fan = Fan(tuple(sorted(cones, key=Cone.sort_key)), sigma)
    fan.validate()
    return fan


def exceptional_edges(fan: Fan, sigma: Cone, lattice: Sublattice | None = None) -> list[RationalVector]:
    """Primitive generators of the edges whose interior lies inside ``int(sigma)``.

    ``lattice`` is the lattice in which generators are primitive (Z^d by
    default).
    """
    out = []
    for e in fan.edges():
        (ray,) = e.rays
        if cone_contains(sigma, ray, strict=True):
            out.append(lattice.primitive_on_ray(ray) if lattice is not None else vector(ray))
    return sorted(out)
