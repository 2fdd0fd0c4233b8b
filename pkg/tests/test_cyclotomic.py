from fractions import Fraction as Q

from hypothesis import given
from hypothesis import strategies as st

from oracles import embed
from qotoric.cyclotomic import CyclotomicNumber as C
from qotoric.cyclotomic import cyclotomic_polynomial, euler_phi


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(12)) - 1 == euler_phi(12) == 4


def test_minimal_level():
    i = C.root_of_unity(4)
    assert i * i == C.rational(-1)
    assert (i * i).level == 1
    assert C.root_of_unity(6, 3) == C.rational(-1)
    assert C.root_of_unity(8, 2) == i
    assert C.root_of_unity(8, 2).level == 4


def test_sum_of_all_roots_vanishes():
    for n in (2, 3, 5, 6, 12):
        assert sum((C.root_of_unity(n, k) for k in range(n)), C.rational(0)).is_zero()


def numbers():
    levels = st.sampled_from([1, 2, 3, 4, 6, 8, 12])
    return st.builds(
        lambda n, cs: C(n, [Q(c) for c in cs]),
        levels,
        st.lists(st.integers(-3, 3), min_size=1, max_size=4),
    )


@given(numbers(), numbers())
def test_field_operations_match_complex_embedding(a, b):
    for exact, approx in ((a + b, embed(a) + embed(b)), (a * b, embed(a) * embed(b)),
                          (a - b, embed(a) - embed(b))):
        assert abs(embed(exact) - approx) < 1e-9
    if not b.is_zero():
        assert a * b.inverse() * b == a


@given(numbers())
def test_galois_action_is_multiplicative(a):
    k = 5  # a unit modulo every sampled level
    assert (a * a).galois(k) == a.galois(k) * a.galois(k)
    if a.is_rational():
        assert a.galois(k) == a
