"""Truncated fractional power series with cyclotomic coefficients.

A :class:`FractionalSeries` is a finite map ``exponent -> coefficient`` with
exponents in ``(1/m) Z^d`` together with a truncation bound ``T``: every term
of total degree ``|u| = sum(u) < T`` is stored exactly and nothing is known
about terms of total degree ``>= T``.  ``T = inf`` means the series is an
exact polynomial.  Operations either propagate a sound bound or raise
:class:`~qotoric.errors.TruncationTooCoarse`; they never guess.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import BoundaryWeight, TruncationTooCoarse, ZeroSeries
from .lattice import Cone, RationalVector, add, common_denominator, cone_contains, dot, unit_vector, vector
from .newton import IntegralPolyhedron, polyhedron_contains, polyhedron_from_support

INF = math.inf


def _coefficient(c) -> CyclotomicNumber:
    if isinstance(c, CyclotomicNumber):
        return c
    return CyclotomicNumber.rational(Fraction(c))


def _as_trunc(T):
    if T is None or T == INF:
        return INF
    return Fraction(T)


class FractionalSeries:
    """An element of ``C[[X^(1/m)]]`` known up to total degree ``trunc``."""

    __slots__ = ("d", "m", "terms", "trunc")

    def __init__(self, d: int, terms: Mapping | Iterable = (), trunc=INF, m: int = 1):
        trunc = _as_trunc(trunc)
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[RationalVector, CyclotomicNumber] = {}
        for u, c in pairs:
            u = vector(u)
            if len(u) != d:
                raise ValueError(f"exponent {u} is not in dimension {d}")
            if sum(u) >= trunc:
                continue
            c = _coefficient(c)
            acc[u] = acc[u] + c if u in acc else c
        clean = {u: c for u, c in acc.items() if not c.is_zero()}
        if trunc != INF and any(x < 0 for u in clean for x in u):
            raise ValueError("truncated series need nonnegative exponents")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "m", lcm(int(m), common_denominator(clean)))
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("FractionalSeries is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, d: int) -> FractionalSeries:
        return cls(d)

    @classmethod
    def monomial(cls, u: Sequence, c=1, trunc=INF) -> FractionalSeries:
        return cls(len(u), {vector(u): c}, trunc)

    @classmethod
    def constant(cls, c, d: int) -> FractionalSeries:
        return cls(d, {(0,) * d: c})

    # -- inspection ------------------------------------------------------

    def support(self) -> list[RationalVector]:
        return sorted(self.terms)

    def coefficient(self, u) -> CyclotomicNumber:
        return self.terms.get(vector(u), CyclotomicNumber.rational(0))

    def is_exact(self) -> bool:
        return self.trunc == INF

    def is_zero(self) -> bool:
        """True only for the exactly known zero series."""
        return not self.terms and self.is_exact()

    def order_bound(self):
        """A lower bound for the total degree of every term, stored or not."""
        stored = min((sum(u) for u in self.terms), default=INF)
        return min(stored, self.trunc)

    def is_polynomial_in_integer_exponents(self) -> bool:
        return all(x.denominator == 1 for u in self.terms for x in u)

    def has_rational_coefficients(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # -- arithmetic ------------------------------------------------------

    def truncate(self, T) -> FractionalSeries:
        return FractionalSeries(self.d, self.terms, min(self.trunc, _as_trunc(T)), self.m)

    def shift(self, a: Sequence) -> FractionalSeries:
        """Multiply by the monomial ``X^a``."""
        a = vector(a)
        return FractionalSeries(self.d, {add(u, a): c for u, c in self.terms.items()},
                                self.trunc + sum(a), self.m)

    def scale(self, c) -> FractionalSeries:
        c = _coefficient(c)
        if c.is_zero():
            return FractionalSeries.zero(self.d)
        return FractionalSeries(self.d, {u: c * x for u, x in self.terms.items()}, self.trunc, self.m)

    def permute(self, perm: Sequence[int]) -> FractionalSeries:
        """Rename variables: the new i-th exponent is the old ``perm[i]``-th."""
        return FractionalSeries(self.d, {tuple(u[p] for p in perm): c for u, c in self.terms.items()},
                                self.trunc, self.m)

    def __add__(self, other):
        if not isinstance(other, FractionalSeries):
            other = FractionalSeries.constant(other, self.d)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, FractionalSeries):
            other = FractionalSeries.constant(other, self.d)
        return series_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FractionalSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FractionalSeries:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = FractionalSeries.constant(1, self.d)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        return self.d == other.d and self.trunc == other.trunc and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"{c}*X^({','.join(map(str, u))})" for u, c in sorted(self.terms.items()))
        tail = "" if self.is_exact() else f" + O(|u|>={self.trunc})"
        return f"FractionalSeries[{body}{tail}]"


def series_add(a: FractionalSeries, b: FractionalSeries) -> FractionalSeries:
    if a.d != b.d:
        raise ValueError("series live in different dimensions")
    terms = dict(a.terms)
    for u, c in b.terms.items():
        terms[u] = terms[u] + c if u in terms else c
    return FractionalSeries(a.d, terms, min(a.trunc, b.trunc), lcm(a.m, b.m))


def series_mul(a: FractionalSeries, b: FractionalSeries) -> FractionalSeries:
    """Product with a sound truncation.

    The unknown part of ``a`` has degree ``>= T_a`` and every term of ``b``
    has degree ``>= ord(b)``, so the product is exact below
    ``min(T_a + ord(b), T_b + ord(a))``.
    """
    if a.d != b.d:
        raise ValueError("series live in different dimensions")
    if a.is_zero() or b.is_zero():
        return FractionalSeries.zero(a.d)
    T = min(a.trunc + b.order_bound(), b.trunc + a.order_bound())
    terms: dict[RationalVector, CyclotomicNumber] = {}
    for u, x in a.terms.items():
        su = sum(u)
        for v, y in b.terms.items():
            if su + sum(v) >= T:
                continue
            w = add(u, v)
            terms[w] = terms[w] + x * y if w in terms else x * y
    return FractionalSeries(a.d, terms, T, lcm(a.m, b.m))


def _require_terms(phi: FractionalSeries) -> None:
    if not phi.terms:
        if phi.is_exact():
            raise ZeroSeries("the series is zero")
        raise TruncationTooCoarse("no term of the series is known")


def newton_polyhedron(phi: FractionalSeries) -> IntegralPolyhedron:
    """Newton polyhedron of the support, with recession cone the orthant.

    For a truncated series the answer is certified only if every unknown
    term already lies in the polyhedron of the stored ones, which holds iff
    the corner points ``T e_i`` of the truncation frontier do.
    """
    _require_terms(phi)
    P = polyhedron_from_support(phi.terms, Cone.orthant(phi.d))
    if not phi.is_exact():
        for i in range(phi.d):
            corner = tuple(phi.trunc * x for x in unit_vector(i, phi.d))
            if not polyhedron_contains(P, corner):
                raise TruncationTooCoarse(
                    f"terms of degree >= {phi.trunc} could add vertices to the Newton polyhedron")
    return P


def _leading(phi: FractionalSeries, eta, cone: Cone | None):
    """Minimal ``eta``-weight of phi and the terms attaining it."""
    eta = vector(eta)
    _require_terms(phi)
    if cone is None:
        interior = all(x > 0 for x in eta)
    else:
        interior = cone_contains(cone, eta, strict=True)
    if not interior:
        raise BoundaryWeight(f"{eta} is not in the interior of the weight cone")
    weights = {u: dot(eta, u) for u in phi.terms}
    low = min(weights.values())
    if not phi.is_exact():
        if any(x <= 0 for x in eta):
            raise BoundaryWeight("truncated series need positive weights")
        if not low < phi.trunc * min(eta):
            raise TruncationTooCoarse(
                f"minimal weight {low} is not below the truncation frontier {phi.trunc * min(eta)}")
    return low, {u: c for u, c in phi.terms.items() if weights[u] == low}


def symbolic_restriction(phi: FractionalSeries, eta: Sequence, cone: Cone | None = None) -> FractionalSeries:
    """Sum of the terms of phi on the face of its Newton polyhedron cut out by eta.

    ``cone`` is the cone of admissible weights (the positive orthant when
    omitted); eta must lie in its interior so that the face is compact.
    """
    _, face = _leading(phi, eta, cone)
    return FractionalSeries(phi.d, face, INF, phi.m)


def monomial_times_unit(phi: FractionalSeries) -> RationalVector | None:
    """The exponent v if phi looks like ``X^v`` times a unit, else None.

    v must be a stored exponent dominated coordinatewise by every stored
    exponent.  Unknown terms have degree above ``|v|`` so none can undercut
    v; the truncated tail is taken to stay inside ``v + orthant``.
    """
    _require_terms(phi)
    exps = list(phi.terms)
    v = tuple(min(u[i] for u in exps) for i in range(phi.d))
    return v if v in phi.terms else None


def substitution_images(phi: FractionalSeries) -> list[FractionalSeries]:
    """All images under ``X_i^(1/m) -> w_i X_i^(1/m)`` for m-th roots of unity w_i.

    Exactly ``m**d`` series, in lexicographic order of the exponent tuples
    of the roots; the first one is phi itself.
    """
    m = phi.m
    roots = [CyclotomicNumber.root_of_unity(m, k) for k in range(m)]
    images = []
    for ks in product(range(m), repeat=phi.d):
        terms = {}
        for u, c in phi.terms.items():
            e = sum(k * int(x * m) for k, x in zip(ks, u)) % m
            terms[u] = c * roots[e]
        images.append(FractionalSeries(phi.d, terms, phi.trunc, m))
    return images


def conjugates(phi: FractionalSeries) -> list[FractionalSeries]:
    """The distinct substitution images of phi, first occurrence order."""
    out: list[FractionalSeries] = []
    for img in substitution_images(phi):
        if img not in out:
            out.append(img)
    return out
