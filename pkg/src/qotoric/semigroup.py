"""Finitely generated affine semigroups in Q^d.

Internally generators are scaled by the common denominator m so that all
enumeration happens on integer vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import _linalg
from .errors import DimensionTooLarge, NonIntegralWeight, BoundaryWeight, NoVertex, SearchBudgetExceeded
from .lattice import (
    MAX_RANK,
    Cone,
    RationalVector,
    Sublattice,
    common_denominator,
    cone_contains,
    dot,
    dual_cone,
    is_strictly_convex,
    primitive,
    vector,
)

DEFAULT_SEARCH_BUDGET = 200_000


def _iadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _isub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _idot(u, v):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class AffineSemigroup:
    """The semigroup generated by ``generators`` inside Q^ambient_rank."""

    generators: tuple[RationalVector, ...]
    ambient_rank: int

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], ambient_rank: int | None = None) -> AffineSemigroup:
        gens = [vector(g) for g in generators]
        if ambient_rank is None:
            if not gens:
                raise ValueError("ambient rank is required for the trivial semigroup")
            ambient_rank = len(gens[0])
        for g in gens:
            if len(g) != ambient_rank:
                raise ValueError(f"generator {g} is not in Q^{ambient_rank}")
        return cls(tuple(sorted({g for g in gens if any(g)})), ambient_rank)

    @cached_property
    def m(self) -> int:
        return common_denominator(self.generators)

    @cached_property
    def group(self) -> Sublattice:
        return Sublattice.from_generators(self.generators, self.ambient_rank)

    @cached_property
    def cone(self) -> Cone:
        return Cone.from_generators(self.generators, self.ambient_rank)

    @cached_property
    def _scaled(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x * self.m) for x in g) for g in self.generators)

    @cached_property
    def _functional(self) -> tuple[int, ...]:
        """An integer functional that is positive on every generator."""
        p = dual_cone(self.cone).interior_point()
        return primitive(p) if any(p) else tuple(0 for _ in range(self.ambient_rank))

    def __contains__(self, u) -> bool:
        return semigroup_member(u, self)

    def scaled(self, k) -> AffineSemigroup:
        k = Fraction(k)
        return AffineSemigroup.from_generators([[k * x for x in g] for g in self.generators], self.ambient_rank)


def has_vertex(s: AffineSemigroup) -> bool:
    """True iff the cone spanned by the semigroup is strictly convex."""
    return is_strictly_convex(s.cone)


def _require_vertex(s: AffineSemigroup) -> None:
    if not has_vertex(s):
        raise NoVertex("the semigroup cone contains a line")


class _Decomposer:
    """Bounded depth-first search for nonnegative integer decompositions."""

    def __init__(self, gens: Sequence[tuple[int, ...]], w: tuple[int, ...], d: int):
        order = sorted(range(len(gens)), key=lambda i: -_idot(w, gens[i]))
        self.gens = [gens[i] for i in order]
        self.weights = [_idot(w, g) for g in self.gens]
        self.w = w
        # normals of cone(gens[i:]) for pruning
        self.normals = []
        for i in range(len(self.gens)):
            tail = Cone.from_generators(self.gens[i:], d)
            D = dual_cone(tail)
            eq = [tuple(l) for l in D.lineality]
            self.normals.append((D.rays, eq))
        self.solve = lru_cache(maxsize=None)(self._solve)

    def _inside(self, v, i) -> bool:
        rays, eq = self.normals[i]
        return all(_idot(l, v) == 0 for l in eq) and all(_idot(r, v) >= 0 for r in rays)

    def _solve(self, v: tuple[int, ...], i: int) -> bool:
        if not any(v):
            return True
        if i == len(self.gens) or not self._inside(v, i):
            return False
        g, wg = self.gens[i], self.weights[i]
        wv = _idot(self.w, v)
        if i == len(self.gens) - 1:
            k, rem = divmod(wv, wg)
            return rem == 0 and all(a == k * b for a, b in zip(v, g))
        for k in range(wv // wg, -1, -1):
            if self.solve(tuple(a - k * b for a, b in zip(v, g)), i + 1):
                return True
        return False


def _decomposer(s: AffineSemigroup) -> _Decomposer:
    dec = s.__dict__.get("_decomposer_cache")
    if dec is None:
        dec = _Decomposer(s._scaled, s._functional, s.ambient_rank)
        s.__dict__["_decomposer_cache"] = dec
    return dec


def semigroup_member(u: Sequence, s: AffineSemigroup) -> bool:
    """Decide whether u is a nonnegative integer combination of the generators."""
    _require_vertex(s)
    u = vector(u)
    if not any(u):
        return True
    scaled = [x * s.m for x in u]
    if any(x.denominator != 1 for x in scaled):
        return False
    if u not in s.group or not cone_contains(s.cone, u):
        return False
    return _decomposer(s).solve(tuple(int(x) for x in scaled), 0)


def minimal_generators(s: AffineSemigroup) -> list[RationalVector]:
    """Generators that are not sums of two nonzero semigroup elements."""
    _require_vertex(s)
    out = []
    for g in s.generators:
        rest = AffineSemigroup(tuple(h for h in s.generators if h != g), s.ambient_rank)
        if not rest.generators or not semigroup_member(g, rest):
            out.append(g)
    return sorted(out)


def saturation(s: AffineSemigroup) -> AffineSemigroup:
    """``cone(s) ∩ group(s)`` presented by its Hilbert basis.

    Works in coordinates of the group lattice, where the cone is
    full-dimensional.  Every Hilbert basis element lies in the zonotope
    spanned by the primitive extreme rays, hence in its bounding box.
    """
    _require_vertex(s)
    L = s.group
    r = L.rank
    if r > MAX_RANK:
        raise DimensionTooLarge(f"group rank {r} exceeds {MAX_RANK}")
    if r == 0:
        return s
    coords = [tuple(int(c) for c in L.coordinates(g)) for g in s.generators]
    C = Cone.from_generators(coords, r)
    D = dual_cone(C)
    w = primitive(D.interior_point())
    rays = C.rays
    bound = sum(_idot(w, ray) for ray in rays)
    lo = [sum(min(0, ray[i]) for ray in rays) for i in range(r)]
    hi = [sum(max(0, ray[i]) for ray in rays) for i in range(r)]

    def inside(x):
        return all(_idot(n, x) >= 0 for n in D.rays)

    candidates = [
        x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        if any(x) and _idot(w, x) <= bound and inside(x)
    ]
    hilbert = [
        x for x in candidates
        if not any(h != x and inside(_isub(x, h)) for h in candidates if _idot(w, h) < _idot(w, x))
    ]
    ambient = [
        tuple(sum((c * b[k] for c, b in zip(x, L.basis)), Fraction(0)) for k in range(s.ambient_rank))
        for x in hilbert
    ]
    return AffineSemigroup.from_generators(ambient, s.ambient_rank)


def _grades(s: AffineSemigroup, n: Sequence) -> list[int]:
    n = vector(n)
    out = []
    for g in s.generators:
        k = dot(n, g)
        if k.denominator != 1:
            raise NonIntegralWeight(f"<{n}, {g}> = {k} is not an integer")
        if k <= 0:
            raise BoundaryWeight(f"generator {g} has weight {k}")
        out.append(int(k))
    return out


def elements_by_grade(s: AffineSemigroup, n: Sequence, K: int) -> list[set[RationalVector]]:
    """``[{u in s : <n, u> = k} for k = 0..K]``."""
    grades = _grades(s, n)
    levels: list[set[tuple[int, ...]]] = [{(0,) * s.ambient_rank}]
    for k in range(1, K + 1):
        level = set()
        for g, wg in zip(s._scaled, grades):
            if wg <= k:
                level.update(_iadd(e, g) for e in levels[k - wg])
        levels.append(level)
    return [{tuple(Fraction(x, s.m) for x in e) for e in level} for level in levels]


def graded_dims(s: AffineSemigroup, n: Sequence, K: int) -> list[int]:
    """Dimensions of the graded pieces of C[s] for the grading by n, up to K."""
    return [len(level) for level in elements_by_grade(s, n, K)]


# -- isomorphism -----------------------------------------------------------

def _group_coords(s: AffineSemigroup, gens) -> list[tuple[int, ...]]:
    return [tuple(int(c) for c in s.group.coordinates(g)) for g in gens]


def _relation_table(s: AffineSemigroup, gens) -> list[list[list[bool]]]:
    """``T[i][j][l]``: whether ``g_i + g_j - g_l`` lies in the semigroup."""
    k = len(gens)
    T = [[[False] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            for l in range(k):
                v = tuple(a + b - c for a, b, c in zip(gens[i], gens[j], gens[l]))
                T[i][j][l] = T[j][i][l] = semigroup_member(v, s)
    return T


def _fingerprint(T, i) -> tuple[int, int, bool]:
    k = len(T)
    return (
        sum(T[i][j][l] for j in range(k) for l in range(k)),
        sum(T[j][l][i] for j in range(k) for l in range(k)),
        T[i][i][i],
    )


def are_isomorphic(a: AffineSemigroup, b: AffineSemigroup,
                   budget: int = DEFAULT_SEARCH_BUDGET) -> list[list[int]] | None:
    """Search for a semigroup isomorphism between two vertex semigroups.

    Returns an integer matrix W acting on coordinate column vectors with
    respect to the canonical bases of the two groups, such that W maps the
    minimal generators of ``a`` bijectively onto those of ``b``; None if no
    such map exists.  Raises SearchBudgetExceeded rather than answer None
    after an incomplete search.
    """
    _require_vertex(a)
    _require_vertex(b)
    A_gens, B_gens = minimal_generators(a), minimal_generators(b)
    r = a.group.rank
    if len(A_gens) != len(B_gens) or r != b.group.rank:
        return None
    if r > MAX_RANK:
        raise DimensionTooLarge(f"group rank {r} exceeds {MAX_RANK}")
    if r == 0:
        return []
    A, B = _group_coords(a, A_gens), _group_coords(b, B_gens)
    Ta, Tb = _relation_table(a, A_gens), _relation_table(b, B_gens)
    k = len(A)
    fa = [_fingerprint(Ta, i) for i in range(k)]
    fb = [_fingerprint(Tb, i) for i in range(k)]
    if sorted(fa) != sorted(fb):
        return None

    # a basis of Q^r among the generators of a goes first
    basis_idx: list[int] = []
    for i in range(k):
        if _linalg.rank([A[j] for j in basis_idx + [i]], r) == len(basis_idx) + 1:
            basis_idx.append(i)
        if len(basis_idx) == r:
            break
    rest_idx = [i for i in range(k) if i not in basis_idx]
    b_lookup = {v: j for j, v in enumerate(B)}
    explored = 0

    def consistent(i, j, assign):
        for i2, j2 in assign.items():
            for i3, j3 in list(assign.items()) + [(i, j)]:
                if Ta[i][i2][i3] != Tb[j][j2][j3] or Ta[i2][i3][i] != Tb[j2][j3][j] \
                        or Ta[i2][i][i3] != Tb[j2][j][j3]:
                    return False
        return Ta[i][i][i] == Tb[j][j][j]

    def finish(assign):
        As = [[Fraction(x) for x in A[i]] for i in basis_idx]
        Bs = [[Fraction(x) for x in B[assign[i]]] for i in basis_idx]
        # W @ As^T = Bs^T  =>  W = Bs^T (As^T)^-1
        try:
            inv = _linalg.inverse([list(col) for col in zip(*As)])
        except ZeroDivisionError:
            return None
        W = _linalg.matmul([list(col) for col in zip(*Bs)], inv)
        if any(x.denominator != 1 for row in W for x in row):
            return None
        if abs(_linalg.det(W)) != 1:
            return None
        W = [[int(x) for x in row] for row in W]
        used = set(assign.values())
        for i in rest_idx:
            img = tuple(_idot(row, A[i]) for row in W)
            j = b_lookup.get(img)
            if j is None or j in used or fa[i] != fb[j]:
                return None
            used.add(j)
        return W

    def search(pos, assign):
        nonlocal explored
        explored += 1
        if explored > budget:
            raise SearchBudgetExceeded(explored)
        if pos == len(basis_idx):
            return finish(assign)
        i = basis_idx[pos]
        for j in range(k):
            if j in assign.values() or fa[i] != fb[j] or not consistent(i, j, assign):
                continue
            assign[i] = j
            W = search(pos + 1, assign)
            del assign[i]
            if W is not None:
                return W
        return None

    return search(0, {})


def map_element(W: Sequence[Sequence[int]], a: AffineSemigroup, b: AffineSemigroup, u: Sequence) -> RationalVector:
    """Image of an element of ``group(a)`` under a witness from :func:`are_isomorphic`."""
    coords = a.group.coordinates(u)
    if coords is None or any(c.denominator != 1 for c in coords):
        raise ValueError(f"{tuple(u)} is not in the group of the semigroup")
    image = [sum(w * c for w, c in zip(row, coords)) for row in W]
    return tuple(sum((c * v[t] for c, v in zip(image, b.group.basis)), Fraction(0))
                 for t in range(b.ambient_rank))


def ambient_matrix(W: Sequence[Sequence[int]], a: AffineSemigroup, b: AffineSemigroup) -> list[list[Fraction]]:
    """The witness as a rational matrix on ambient coordinates (full-rank groups)."""
    d = a.ambient_rank
    if a.group.rank != d or b.group.rank != d:
        raise ValueError("ambient matrices need full-rank groups")
    Ba_T = [list(col) for col in zip(*a.group.basis)]
    Bb_T = [list(col) for col in zip(*b.group.basis)]
    Wf = [[Fraction(x) for x in row] for row in W]
    return _linalg.matmul(_linalg.matmul(Bb_T, Wf), _linalg.inverse(Ba_T))


def is_valid_witness(W, a: AffineSemigroup, b: AffineSemigroup, samples: Iterable[Sequence] = ()) -> bool:
    """Audit a witness: unimodular, generators onto generators, samples into b."""
    if len(W) != a.group.rank:
        return False
    if W and abs(_linalg.det([[Fraction(x) for x in row] for row in W])) != 1:
        return False
    images = sorted(map_element(W, a, b, g) for g in minimal_generators(a))
    if images != minimal_generators(b):
        return False
    return all(semigroup_member(map_element(W, a, b, u), b) for u in samples)
