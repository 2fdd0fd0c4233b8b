"""Divisorial valuations, leading forms and graded-isomorphism reports.

The reports are finite-grade evidence: they check multiplicativity of
leading forms on samples, exhibit an element with leading form X^u for each
semigroup element u of bounded grade, and compare graded-piece counts.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Sequence

from . import _linalg
from .errors import BoundaryWeight, NonIntegralValue, WeightNotInDualLattice
from .lattice import Cone, RationalVector, dot, dual_cone, unit_vector, vector
from .newton import dual_newton_diagram, exceptional_edges, polyhedron_from_support
from .qo import QuasiOrdinaryBranch, semiroot_value
from .semigroup import (
    AffineSemigroup,
    _grades,
    _require_vertex,
    are_isomorphic,
    elements_by_grade,
    graded_dims,
    minimal_generators,
    saturation,
)
from .series import FractionalSeries, _leading, symbolic_restriction

DEFAULT_SEED = 20240229

COUNT_CAVEAT = (
    "filtration-side counts are numbers of distinct leading exponents of a spanning "
    "family; they equal graded dimensions only if no cancellation shrinks the span"
)


def divisorial_valuation(phi: FractionalSeries, n: Sequence, cone: Cone | None = None) -> int:
    """``min <n, u>`` over the support of phi; ``cone`` is the weight cone (orthant by default)."""
    low, _ = _leading(phi, n, cone)
    if low.denominator != 1:
        raise NonIntegralValue(f"valuation {low} is not an integer; {tuple(n)} is in the wrong lattice")
    return int(low)


def leading_form(phi: FractionalSeries, n: Sequence, cone: Cone | None = None) -> FractionalSeries:
    """The sum of the terms of phi of minimal n-weight."""
    value = divisorial_valuation(phi, n, cone)
    lf = symbolic_restriction(phi, n, cone)
    assert all(dot(n, u) == value for u in lf.terms), "leading form is not homogeneous"
    return lf


def exceptional_weights(s: AffineSemigroup) -> list[RationalVector]:
    """Primitive weights of the exceptional divisors of the normalized blow-up.

    The blow-up is that of the maximal ideal of the normalization: its Newton
    polyhedron is spanned by the Hilbert basis of the saturation, and the
    weights are primitive in the lattice dual to ``group(s)``.
    """
    _require_vertex(s)
    if s.group.rank != s.ambient_rank:
        raise ValueError("exceptional weights need a semigroup of full rank")
    sat = saturation(s)
    sigma = dual_cone(s.cone)
    P = polyhedron_from_support(sat.generators, s.cone)
    fan = dual_newton_diagram(P, sigma)
    return exceptional_edges(fan, sigma, s.group.dual())


@dataclass
class GradedReport:
    weight: RationalVector
    max_grade: int
    dims_semigroup: list[int]
    dims_filtration: list[int]
    samples: int
    multiplicativity_failures: int
    leading_form_witnesses: dict[RationalVector, FractionalSeries]
    checks: dict[str, bool]
    counterexample: str | None = None
    caveat: str = COUNT_CAVEAT
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _span_rank(forms: list[FractionalSeries]) -> int:
    """Rank of the C-span of exact series with rational coefficients."""
    monomials = sorted({u for f in forms for u in f.terms})
    if not monomials:
        return 0
    rows = [[f.coefficient(u).to_fraction() for u in monomials] for f in forms]
    return _linalg.rank(rows, len(monomials))


def _first(current: str | None, message: str) -> str:
    return current if current is not None else message


def verify_toric_graded_iso(s: AffineSemigroup, n: Sequence, K: int, samples: int = 50,
                            seed: int = DEFAULT_SEED) -> GradedReport:
    """Check the graded isomorphism between gr_D of C[s] and the n-graded ring C[s]."""
    _require_vertex(s)
    n = vector(n)
    _grades(s, n)  # raises on non-integral or non-positive weights
    cone = dual_cone(s.cone)
    d = s.ambient_rank
    levels = elements_by_grade(s, n, K)
    dims_semigroup = [len(level) for level in levels]
    counter = None

    # (b) every X^u is its own leading form
    witnessed = True
    by_grade: list[list[FractionalSeries]] = [[] for _ in range(K + 1)]
    for k, level in enumerate(levels):
        for u in sorted(level):
            x = FractionalSeries.monomial(u)
            lf = leading_form(x, n, cone)
            if lf != x or divisorial_valuation(x, n, cone) != k:
                witnessed = False
                counter = _first(counter, f"X^{u} is not its own leading form")
            by_grade[k].append(lf)
    witnesses = {g: FractionalSeries.monomial(g) for g in minimal_generators(s)}
    for g, w in witnesses.items():
        if symbolic_restriction(w, n, cone) != FractionalSeries.monomial(g):
            witnessed = False

    # (a) multiplicativity on random finitely supported elements
    rng = random.Random(seed)
    pool = sorted(u for level in levels for u in level)
    failures = 0

    def random_element():
        terms = {}
        for u in rng.sample(pool, min(len(pool), rng.randint(1, 4))):
            terms[u] = rng.choice([c for c in range(-5, 6) if c])
        return FractionalSeries(d, terms)

    for _ in range(samples):
        phi, psi = random_element(), random_element()
        lhs = leading_form(phi * psi, n, cone)
        rhs = leading_form(phi, n, cone) * leading_form(psi, n, cone)
        if lhs != rhs:
            failures += 1
            counter = _first(counter, f"leading forms of {phi} and {psi} do not multiply")
        for f in (phi, psi):
            k = divisorial_valuation(f, n, cone)
            if k <= K:
                by_grade[k].append(leading_form(f, n, cone))

    # (c) graded pieces of the filtration, from spans of leading forms
    dims_filtration = [_span_rank(forms) for forms in by_grade]
    if dims_filtration != dims_semigroup:
        counter = _first(counter, f"filtration dims {dims_filtration} != {dims_semigroup}")
    return GradedReport(
        weight=n, max_grade=K, dims_semigroup=dims_semigroup, dims_filtration=dims_filtration,
        samples=samples, multiplicativity_failures=failures, leading_form_witnesses=witnesses,
        checks={"multiplicativity": failures == 0, "witnesses": witnessed,
                "dimensions": dims_filtration == dims_semigroup},
        counterexample=counter,
    )


def _check_qo_weight(zeta: QuasiOrdinaryBranch, n: RationalVector) -> None:
    if len(n) != zeta.d:
        raise ValueError(f"weight {n} is not in dimension {zeta.d}")
    if any(x <= 0 for x in n):
        raise BoundaryWeight(f"{n} is not in the interior of the positive orthant")
    for b in zeta.data.lattices[-1].basis:
        if dot(n, b).denominator != 1:
            raise WeightNotInDualLattice(f"<{n}, {b}> is not an integer")


def verify_qo_graded_iso(zeta: QuasiOrdinaryBranch, n: Sequence, K: int, samples: int = 50,
                         seed: int = DEFAULT_SEED) -> GradedReport:
    """Check the graded isomorphism between gr_D of C[[X]][ζ] and the n-graded ring C[Γ]."""
    n = vector(n)
    _check_qo_weight(zeta, n)
    data = zeta.data
    d = zeta.d
    gamma = data.gamma_semigroup
    counter = None

    # (a) semiroot values have monomial leading forms X^γ_j
    q = [semiroot_value(zeta, j) for j in range(1, data.g + 1)]
    leading_ok = True
    witnesses: dict[RationalVector, FractionalSeries] = {
        unit_vector(i, d): FractionalSeries.monomial(unit_vector(i, d)) for i in range(d)}
    for j, (qj, gj) in enumerate(zip(q, data.gammas), start=1):
        lf = leading_form(qj, n)
        if list(lf.terms) != [gj]:
            leading_ok = False
            counter = _first(counter, f"leading form of q_{j} is {lf}, expected a multiple of X^{gj}")
        witnesses[gj] = qj
    for u, w in witnesses.items():
        if list(symbolic_restriction(w, n).terms) != [u]:
            leading_ok = False

    # products of semiroot values with exponents below the indices
    boxes = list(product(*(range(nj) for nj in data.indices)))
    block: dict[tuple[int, ...], FractionalSeries] = {}
    for b in boxes:
        block[b] = prod((qj ** bj for qj, bj in zip(q, b)), start=FractionalSeries.constant(1, d))

    def element(a, b) -> FractionalSeries:
        return block[b].shift(a)

    # (b) multiplicativity on the family X^a * prod q_j^b_j
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        pair = []
        for _ in range(2):
            a = tuple(rng.randint(0, 2) for _ in range(d))
            pair.append(element(a, rng.choice(boxes)))
        phi, psi = pair
        if leading_form(phi * psi, n) != leading_form(phi, n) * leading_form(psi, n):
            failures += 1
            counter = _first(counter, f"leading forms of {phi} and {psi} do not multiply")

    # (c) distinct realized leading exponents per grade
    realized: list[set[RationalVector]] = [set() for _ in range(K + 1)]
    for b in boxes:
        lf = leading_form(block[b], n)
        if len(lf.terms) != 1:
            counter = _first(counter, f"leading form of the product {b} is not a monomial")
        base = divisorial_valuation(block[b], n)
        if base > K:
            continue
        bounds = [int((K - base) // x) for x in n]
        for a in product(*(range(t + 1) for t in bounds)):
            k = base + dot(n, a)
            if k <= K:
                for u in lf.terms:
                    realized[int(k)].add(tuple(x + y for x, y in zip(u, a)))
    dims_filtration = [len(r) for r in realized]
    dims_semigroup = graded_dims(gamma, n, K)
    if dims_filtration != dims_semigroup:
        counter = _first(counter, f"realized counts {dims_filtration} != {dims_semigroup}")
    return GradedReport(
        weight=n, max_grade=K, dims_semigroup=dims_semigroup, dims_filtration=dims_filtration,
        samples=samples, multiplicativity_failures=failures, leading_form_witnesses=witnesses,
        checks={"multiplicativity": failures == 0, "leading_forms": leading_ok,
                "dimensions": dims_filtration == dims_semigroup},
        counterexample=counter,
    )


def invariance_check(zeta_a: QuasiOrdinaryBranch, zeta_b: QuasiOrdinaryBranch):
    """An isomorphism witness between the semigroups Γ of two branches, or None."""
    return are_isomorphic(zeta_a.data.gamma_semigroup, zeta_b.data.gamma_semigroup)
