"""The ten acceptance criteria, each at its stated tolerance and time budget.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""
import random
import time
from fractions import Fraction as Q
from math import prod

import pytest

from catalog import BRANCHES, TORIC, branch, toric
from qotoric.grading import (
    divisorial_valuation,
    exceptional_weights,
    invariance_check,
    verify_qo_graded_iso,
    verify_toric_graded_iso,
)
from qotoric.lattice import Cone, lattice_index
from qotoric.newton import face_of, polyhedron_from_support
from qotoric.qo import (
    WeierstrassPolynomial,
    branch_polynomial,
    is_quasi_ordinary,
    semiroot_value,
)
from qotoric.grading import leading_form
from qotoric.semigroup import (
    AffineSemigroup,
    are_isomorphic,
    is_valid_witness,
    map_element,
    minimal_generators,
    semigroup_member,
)
from qotoric.series import FractionalSeries as F

h = Q(1, 2)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def poly_from(coeffs, d):
    """Monic Weierstrass polynomial from low-degree-first term maps."""
    return WeierstrassPolynomial(len(coeffs), tuple(F(d, c) for c in coeffs))


@pytest.mark.criterion(1, "cusp pipeline")
def test_criterion_01_cusp_pipeline():
    with Timer() as t:
        zeta = branch("cusp")
        data = zeta.data
        assert data.exponents == ((Q(3, 2),),)
        assert data.indices == (2,)
        assert data.gammas == ((Q(3, 2),),)
        assert data.gamma_semigroup.m == 2
        assert minimal_generators(data.gamma_semigroup.scaled(2)) == [(2,), (3,)]
        f = branch_polynomial(zeta)
        assert f == poly_from([{(3,): -1}, {}], 1)
        assert is_quasi_ordinary(f) == (3,)
    assert t.elapsed < 1


@pytest.mark.criterion(2, "Lipman surface example")
def test_criterion_02_lipman():
    with Timer() as t:
        zeta = branch("lipman")
        data = zeta.data
        assert data.exponents == ((h, 0), (h, h))
        assert data.indices == (2, 2)
        assert data.gammas == ((h, 0), (1, h))
        # (Y^2 - X1 - X1 X2)^2 - 4 X1^2 X2, expanded
        A = F(2, {(1, 0): -1, (1, 1): -1})
        expected = poly_from([(A * A - F(2, {(2, 1): 4})).terms, {}, (A * 2).terms, {}], 2)
        assert branch_polynomial(zeta) == expected
        q2 = semiroot_value(zeta, 2)
        assert q2 == F(2, {(1, h): 2, (1, 1): 1})
        for n in exceptional_weights(data.gamma_semigroup) + [(2, 4), (4, 2)]:
            assert leading_form(q2, n) == F(2, {(1, h): 2})
    assert t.elapsed < 5


@pytest.mark.criterion(3, "inversion invariance")
def test_criterion_03_inversion_invariance():
    with Timer() as t:
        a, b = branch("cusp"), branch("cusp_inverse")
        W = invariance_check(a, b)
        assert W is not None
        ga, gb = a.data.gamma_semigroup, b.data.gamma_semigroup
        assert is_valid_witness(W, ga, gb)
        assert minimal_generators(ga.scaled(ga.m)) == [(2,), (3,)]
        assert minimal_generators(gb.scaled(gb.m)) == [(2,), (3,)]
    assert t.elapsed < 1


@pytest.mark.criterion(4, "negative quasi-ordinarity")
def test_criterion_04_not_quasi_ordinary():
    with Timer() as t:
        f = poly_from([{(1, 0): -1, (0, 1): -1}, {}], 2)
        assert is_quasi_ordinary(f) is None
    assert t.elapsed < 1


def _random_series(rng, d, m):
    terms = {}
    for _ in range(rng.randint(1, 8)):
        while True:
            u = tuple(Q(rng.randint(0, 2 * m), m) for _ in range(d))
            if sum(u) <= 2:
                break
        terms[u] = rng.choice([c for c in range(-4, 5) if c])
    return F(d, terms, trunc=10)


@pytest.mark.criterion(5, "valuation axioms")
def test_criterion_05_valuation_axioms():
    rng = random.Random(5)
    failures = []
    with Timer() as t:
        for _ in range(100):
            d, m = rng.randint(1, 3), rng.randint(1, 2)
            phi, psi = _random_series(rng, d, m), _random_series(rng, d, m)
            for _ in range(5):
                n = tuple(m * rng.randint(1, 2) for _ in range(d))
                a, b = divisorial_valuation(phi, n), divisorial_valuation(psi, n)
                if divisorial_valuation(phi * psi, n) != a + b:
                    failures.append(("product", phi, psi, n))
                total = phi + psi
                if total.terms and divisorial_valuation(total, n) < min(a, b):
                    failures.append(("sum", phi, psi, n))
    assert failures == []
    assert t.elapsed < 10


@pytest.mark.criterion(6, "Minkowski-face law")
def test_criterion_06_minkowski_faces():
    rng = random.Random(6)
    failures = []
    with Timer() as t:
        for _ in range(100):
            d = rng.randint(2, 3)
            A = {tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(1, 4))}
            B = {tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(1, 4))}
            S = {tuple(x + y for x, y in zip(a, b)) for a in A for b in B}
            orthant = Cone.orthant(d)
            PA, PB, PS = (polyhedron_from_support(X, orthant) for X in (A, B, S))
            for _ in range(5):
                eta = tuple(rng.randint(1, 6) for _ in range(d))
                lhs = set(face_of(PS, eta))
                rhs = {tuple(x + y for x, y in zip(a, b)) for a in face_of(PA, eta) for b in face_of(PB, eta)}
                if lhs != rhs:
                    failures.append((A, B, eta))
    assert failures == []
    assert t.elapsed < 10


@pytest.mark.criterion(7, "toric graded verification")
def test_criterion_07_toric_graded():
    with Timer() as t:
        checked = 0
        for name in TORIC:
            s = toric(name)
            weights = exceptional_weights(s)
            assert weights
            for n in weights:
                report = verify_toric_graded_iso(s, n, 10, samples=50)
                assert report.passed, (name, n, report.counterexample)
                checked += 1
    assert checked >= len(TORIC)
    assert t.elapsed < 30


@pytest.mark.criterion(8, "quasi-ordinary graded verification")
def test_criterion_08_qo_graded():
    with Timer() as t:
        for name in ("cusp", "lipman", "x1_sqrt_x2"):
            zeta = branch(name)
            gamma = zeta.data.gamma_semigroup
            weights = exceptional_weights(gamma)
            assert weights
            for n in weights:
                report = verify_qo_graded_iso(zeta, n, 8, samples=50)
                assert report.passed, (name, n, report.counterexample)
                toric_report = verify_toric_graded_iso(gamma, n, 8, samples=50)
                assert toric_report.passed
                assert report.dims_filtration == report.dims_semigroup == toric_report.dims_semigroup
    assert t.elapsed < 60


def _random_unimodular(rng, d):
    U = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(2 * d):
        if d == 1:
            break
        i, j = rng.sample(range(d), 2)
        k = rng.choice([-2, -1, 1, 2])
        U[i] = [a + k * b for a, b in zip(U[i], U[j])]
    if rng.random() < 0.5:
        U[0] = [-x for x in U[0]]
    perm = list(range(d))
    rng.shuffle(perm)
    return [U[p] for p in perm]


def _random_vertex_semigroup(rng):
    while True:
        d = rng.randint(1, 3)
        gens = set()
        for _ in range(rng.randint(1, 7)):
            g = tuple(rng.randint(0, 4) for _ in range(d))
            if any(g):
                gens.add(g)
        if not gens:
            continue
        s = AffineSemigroup.from_generators(gens, d)
        if len(minimal_generators(s)) <= 6:
            return s


@pytest.mark.criterion(9, "isomorphism decision soundness")
def test_criterion_09_isomorphism_soundness():
    rng = random.Random(9)
    failures = []
    with Timer() as t:
        for _ in range(50):
            a = _random_vertex_semigroup(rng)
            d = a.ambient_rank
            U = _random_unimodular(rng, d)
            gens = [tuple(sum(x * y for x, y in zip(row, g)) for row in U) for g in a.generators]
            rng.shuffle(gens)
            b = AffineSemigroup.from_generators(gens, d)
            W = are_isomorphic(a, b)
            if W is None or not is_valid_witness(W, a, b):
                failures.append((a, b, W))
                continue
            mins = minimal_generators(a)
            for _ in range(200):
                coeffs = [rng.randint(0, 3) for _ in mins]
                u = tuple(sum((c * g[i] for c, g in zip(coeffs, mins)), Q(0)) for i in range(d))
                if not semigroup_member(map_element(W, a, b, u), b):
                    failures.append((a, b, W, u))
                    break
        g23 = AffineSemigroup.from_generators([(2,), (3,)])
        assert are_isomorphic(g23, AffineSemigroup.from_generators([(2,), (5,)])) is None
        assert are_isomorphic(g23, AffineSemigroup.from_generators([(1,)])) is None
    assert failures == []
    assert t.elapsed < 60


@pytest.mark.criterion(10, "index multiplicativity")
def test_criterion_10_index_multiplicativity():
    for name in BRANCHES:
        zeta = branch(name)
        data = zeta.data
        index = lattice_index(data.lattices[0], data.lattices[-1])
        assert index == prod(data.indices) == branch_polynomial(zeta).degree, name


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
