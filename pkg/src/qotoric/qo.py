"""Quasi-ordinary polynomials and branches.

A branch is a fractional power series ζ; its characteristic exponents are
read off by lattice membership, and from them the lattice tower, the
indices n_j, the generators γ_j and the semigroup Γ follow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Sequence

from .cyclotomic import CyclotomicNumber
from .errors import (
    DegenerateExponent,
    NotGaloisStable,
    NotQuasiOrdinary,
    TruncationTooCoarse,
    ZeroDiscriminant,
)
from .lattice import RationalVector, Sublattice, lattice_index, leq, unit_vector, vector
from .semigroup import AffineSemigroup
from .series import INF, FractionalSeries, conjugates, monomial_times_unit

MAX_BRANCH_DEGREE = 16


@dataclass(frozen=True)
class WeierstrassPolynomial:
    """``Y^degree + sum_k coefficients[k] Y^k`` with coefficients in C[[X]]."""

    degree: int
    coefficients: tuple[FractionalSeries, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if len(self.coefficients) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(self.coefficients)}")
        dims = {c.d for c in self.coefficients}
        if len(dims) != 1:
            raise ValueError("coefficients live in different dimensions")
        for k, c in enumerate(self.coefficients):
            if not c.is_polynomial_in_integer_exponents():
                raise ValueError(f"coefficient of Y^{k} has fractional exponents")
            if any(x < 0 for u in c.terms for x in u):
                raise ValueError(f"coefficient of Y^{k} has negative exponents")
            if not c.coefficient((0,) * c.d).is_zero():
                raise ValueError(f"coefficient of Y^{k} does not vanish at the origin")

    @property
    def d(self) -> int:
        return self.coefficients[0].d

    def monic_coefficients(self) -> list[FractionalSeries]:
        return list(self.coefficients) + [FractionalSeries.constant(1, self.d)]

    def derivative_coefficients(self) -> list[FractionalSeries]:
        full = self.monic_coefficients()
        return [full[k] * k for k in range(1, len(full))]

    def __eq__(self, other):
        if not isinstance(other, WeierstrassPolynomial):
            return NotImplemented
        return self.degree == other.degree and list(self.coefficients) == list(other.coefficients)

    __hash__ = None


def _sylvester(f: list[FractionalSeries], g: list[FractionalSeries], d: int) -> list[list[FractionalSeries]]:
    """Sylvester matrix of two polynomials given low degree first."""
    n, k = len(f) - 1, len(g) - 1
    size = n + k
    zero = FractionalSeries.zero(d)
    rows = []
    for src, shifts in ((f, k), (g, n)):
        high_first = list(reversed(src))
        for s in range(shifts):
            row = [zero] * size
            for i, c in enumerate(high_first):
                row[s + i] = c
            rows.append(row)
    return rows


def _determinant(M: list[list[FractionalSeries]], d: int) -> FractionalSeries:
    """Laplace expansion along rows, memoised on the set of used columns."""
    size = len(M)
    memo: dict[int, FractionalSeries] = {}

    def minor(mask: int) -> FractionalSeries:
        r = bin(mask).count("1")
        if r == size:
            return FractionalSeries.constant(1, d)
        if mask in memo:
            return memo[mask]
        total = FractionalSeries.zero(d)
        free = 0
        for c in range(size):
            if mask >> c & 1:
                continue
            entry = M[r][c]
            if not entry.is_zero():
                term = entry * minor(mask | 1 << c)
                total = total - term if free % 2 else total + term
            free += 1
        memo[mask] = total
        return total

    return minor(0)


def discriminant(f: WeierstrassPolynomial) -> FractionalSeries:
    """The resultant of f and ∂f/∂Y, as the raw Sylvester determinant."""
    res = _determinant(_sylvester(f.monic_coefficients(), f.derivative_coefficients(), f.d), f.d)
    if not res.is_exact() and not res.trunc > 0:
        raise TruncationTooCoarse("the discriminant is not determined by the given truncations")
    return res


def is_quasi_ordinary(f: WeierstrassPolynomial) -> RationalVector | None:
    """δ with ``Δ = X^δ · unit``, or None if the discriminant has several Newton vertices."""
    disc = discriminant(f)
    if disc.is_zero():
        raise ZeroDiscriminant("f has a repeated factor")
    return monomial_times_unit(disc)


# -- branches --------------------------------------------------------------

@dataclass(frozen=True)
class CharacteristicData:
    exponents: tuple[RationalVector, ...]
    lattices: tuple[Sublattice, ...]
    indices: tuple[int, ...]
    gammas: tuple[RationalVector, ...]
    gamma_semigroup: AffineSemigroup

    @property
    def g(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return prod(self.indices)


def lattice_tower(lambdas: Sequence[Sequence], d: int | None = None) -> CharacteristicData:
    """Lattices ``M_j``, indices ``n_j``, generators ``γ_j`` and Γ from the exponents."""
    lambdas = [vector(l) for l in lambdas]
    if d is None:
        if not lambdas:
            raise ValueError("the dimension is required when there are no exponents")
        d = len(lambdas[0])
    for a, b in zip(lambdas, lambdas[1:]):
        if not leq(a, b):
            raise NotQuasiOrdinary(f"exponents {a} and {b} are not ordered")
    lattices = [Sublattice.standard(d)]
    for lam in lambdas:
        lattices.append(lattices[-1] + Sublattice.from_generators([lam], d))
    indices = []
    for j in range(1, len(lattices)):
        n = lattice_index(lattices[j - 1], lattices[j])
        if n < 2:
            raise DegenerateExponent(f"{lambdas[j - 1]} already lies in the previous lattice")
        indices.append(n)
    gammas: list[RationalVector] = []
    for j, lam in enumerate(lambdas):
        if j == 0:
            gammas.append(lam)
        else:
            prev = gammas[-1]
            gammas.append(tuple(indices[j - 1] * p + a - b for p, a, b in zip(prev, lam, lambdas[j - 1])))
    gens = [unit_vector(i, d) for i in range(d)] + gammas
    return CharacteristicData(tuple(lambdas), tuple(lattices), tuple(indices), tuple(gammas),
                              AffineSemigroup.from_generators(gens, d))


def _extract_exponents(phi: FractionalSeries) -> list[RationalVector]:
    support = sorted(phi.terms, key=lambda u: (sum(u), u))
    M = Sublattice.standard(phi.d)
    lambdas: list[RationalVector] = []
    while True:
        outside = [u for u in support if u not in M]
        if not outside:
            return lambdas
        lam = outside[0]
        if lambdas and not leq(lambdas[-1], lam):
            raise NotQuasiOrdinary(f"characteristic exponents {lambdas[-1]} and {lam} are not ordered")
        # in a quasi-ordinary branch every exponent outside M dominates lam
        for u in outside:
            if not leq(lam, u):
                raise NotQuasiOrdinary(f"exponent {u} is outside the lattice but does not dominate {lam}")
        lambdas.append(lam)
        M = M + Sublattice.from_generators([lam], phi.d)


class QuasiOrdinaryBranch:
    """A quasi-ordinary branch ζ, validated on construction.

    ``complete`` asserts that the truncation of a non-exact series lies
    beyond every characteristic exponent.
    """

    def __init__(self, series: FractionalSeries, complete: bool = False):
        if any(x < 0 for u in series.terms for x in u):
            raise ValueError("a branch has nonnegative exponents")
        self.series = series
        self.complete = complete or series.is_exact()
        self.data  # validate eagerly

    @property
    def d(self) -> int:
        return self.series.d

    @property
    def m(self) -> int:
        return self.series.m

    @cached_property
    def data(self) -> CharacteristicData:
        return lattice_tower(characteristic_exponents(self), self.d)

    def __repr__(self):
        return f"QuasiOrdinaryBranch({self.series!r})"


def characteristic_exponents(zeta: QuasiOrdinaryBranch | FractionalSeries) -> list[RationalVector]:
    """λ_1 ≤ … ≤ λ_g: successive smallest support exponents outside the lattice tower."""
    if isinstance(zeta, QuasiOrdinaryBranch):
        phi, complete = zeta.series, zeta.complete
    else:
        phi, complete = zeta, zeta.is_exact()
    if not complete:
        raise TruncationTooCoarse("a truncated branch needs complete=True to fix its exponents")
    return _extract_exponents(phi)


def truncated_branch(zeta: QuasiOrdinaryBranch, j: int) -> FractionalSeries:
    """The terms of ζ whose exponents lie in ``M_{j-1}``."""
    if j < 1:
        raise ValueError("j starts at 1")
    M = zeta.data.lattices[min(j - 1, zeta.data.g)]
    phi = zeta.series
    return FractionalSeries(phi.d, {u: c for u, c in phi.terms.items() if u in M}, phi.trunc)


def semiroot_value(zeta: QuasiOrdinaryBranch, j: int) -> FractionalSeries:
    """``q_j(ζ) = ∏ (ζ - τ)`` over the conjugates τ of the j-th truncation."""
    data = zeta.data
    if not 1 <= j <= data.g:
        raise ValueError(f"j must lie in 1..{data.g}")
    taus = conjugates(truncated_branch(zeta, j))
    expected = prod(data.indices[: j - 1])
    assert len(taus) == expected, f"{len(taus)} conjugates, expected {expected}"
    out = FractionalSeries.constant(1, zeta.d)
    for tau in taus:
        out = out * (zeta.series - tau)
    return out


def branch_polynomial(zeta: QuasiOrdinaryBranch) -> WeierstrassPolynomial:
    """``∏ (Y - τ)`` over the conjugates τ of ζ, with Galois stability checked."""
    data = zeta.data
    if data.degree > MAX_BRANCH_DEGREE:
        raise ValueError(f"degree {data.degree} exceeds {MAX_BRANCH_DEGREE}")
    taus = conjugates(zeta.series)
    assert len(taus) == data.degree, f"{len(taus)} conjugates, expected {data.degree}"
    d = zeta.d
    poly = [FractionalSeries.constant(1, d)]  # low degree first
    for tau in taus:
        shifted = [FractionalSeries.zero(d)] + poly
        poly = [shifted[k] - (tau * poly[k] if k < len(poly) else 0) for k in range(len(shifted))]
    coeffs = []
    for k, c in enumerate(poly[:-1]):
        if not c.is_polynomial_in_integer_exponents() or not c.has_rational_coefficients():
            raise NotGaloisStable(f"coefficient of Y^{k} is not fixed by the conjugations: {c}")
        coeffs.append(FractionalSeries(d, c.terms, c.trunc))
    return WeierstrassPolynomial(len(taus), tuple(coeffs))


def branch_from_terms(terms, d: int, trunc=INF, complete: bool = False) -> QuasiOrdinaryBranch:
    return QuasiOrdinaryBranch(FractionalSeries(d, terms, trunc), complete)
