from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import minimal_by_decomposition, semigroup_closure
from qotoric.errors import BoundaryWeight, NonIntegralWeight, NoVertex, SearchBudgetExceeded
from qotoric.lattice import cone_contains, dot
from qotoric.semigroup import (
    AffineSemigroup as S,
    ambient_matrix,
    are_isomorphic,
    elements_by_grade,
    graded_dims,
    has_vertex,
    is_valid_witness,
    minimal_generators,
    saturation,
    semigroup_member,
)

h = Q(1, 2)
gens2 = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(any), min_size=1, max_size=4)


def total(u):
    return sum(u)


def test_numerical_semigroup():
    s = S.from_generators([(3,), (5,)])
    assert [k for k in range(12) if semigroup_member((k,), s)] == [0, 3, 5, 6, 8, 9, 10, 11]
    assert minimal_generators(S.from_generators([(2,), (3,), (4,), (5,)])) == [(2,), (3,)]


def test_fractional_generators():
    s = S.from_generators([(h, 0), (1, h), (0, 1)])
    assert s.m == 2
    assert (Q(3, 2), h) in s
    assert (0, h) not in s
    assert s.scaled(2) == S.from_generators([(1, 0), (2, 1), (0, 2)])


@settings(max_examples=60, deadline=None)
@given(gens2)
def test_membership_matches_closure(gens):
    s = S.from_generators(gens)
    closed = semigroup_closure(gens, total, 8)
    for u in product(range(9), repeat=2):
        if total(u) <= 8:
            assert semigroup_member(u, s) == (u in closed), u


@settings(max_examples=60, deadline=None)
@given(gens2)
def test_minimal_generators_are_the_irreducibles(gens):
    s = S.from_generators(gens)
    bound = max(total(g) for g in gens)
    closed = semigroup_closure(gens, total, bound)
    assert minimal_generators(s) == minimal_by_decomposition(closed)


def test_no_vertex():
    s = S.from_generators([(1,), (-1,)])
    assert not has_vertex(s)
    with pytest.raises(NoVertex):
        semigroup_member((0,), s)
    with pytest.raises(NoVertex):
        saturation(s)


def test_saturation_examples():
    assert saturation(S.from_generators([(2,), (3,)])).generators == ((1,),)
    assert saturation(S.from_generators([(1, 0), (1, 2), (2, 3)])).generators == ((1, 0), (1, 1), (1, 2))
    # group Z x 2Z does not contain (1, 1): already saturated
    assert saturation(S.from_generators([(1, 0), (1, 2)])).generators == ((1, 0), (1, 2))
    v = saturation(S.from_generators([(2, 0), (0, 2)]))
    assert v.generators == ((0, 2), (2, 0))


@settings(max_examples=40, deadline=None)
@given(gens2)
def test_saturation_is_cone_meet_group(gens):
    s = S.from_generators(gens)
    sat = saturation(s)
    assert sat.cone == s.cone and sat.group == s.group
    assert all(semigroup_member(g, sat) for g in s.generators)
    for u in product(range(-2, 7), repeat=2):
        expected = cone_contains(s.cone, u) and u in s.group
        assert semigroup_member(u, sat) == expected, u


def test_graded_dims_examples():
    assert graded_dims(S.from_generators([(2,), (3,)]), (1,), 7) == [1, 0, 1, 1, 1, 1, 1, 1]
    assert graded_dims(S.from_generators([(1, 0), (0, 1)]), (1, 1), 4) == [1, 2, 3, 4, 5]
    assert graded_dims(S.from_generators([(1, 0), (0, 1)]), (1, 2), 4) == [1, 1, 2, 2, 3]


@settings(max_examples=40, deadline=None)
@given(gens2, st.tuples(st.integers(1, 3), st.integers(1, 3)))
def test_graded_pieces_match_closure(gens, n):
    s = S.from_generators(gens)
    weight = lambda u: dot(n, u)
    closed = semigroup_closure(gens, weight, 6)
    levels = elements_by_grade(s, n, 6)
    for k, level in enumerate(levels):
        assert level == {u for u in closed if weight(u) == k}


def test_grading_errors():
    s = S.from_generators([(2,), (3,)])
    with pytest.raises(NonIntegralWeight):
        graded_dims(s, (h,), 3)
    with pytest.raises(BoundaryWeight):
        graded_dims(S.from_generators([(1, 0), (0, 1)]), (1, 0), 3)


def test_isomorphism_examples():
    a = S.from_generators([(2,), (3,)])
    assert are_isomorphic(a, S.from_generators([(2,), (5,)])) is None
    assert are_isomorphic(a, S.from_generators([(4,), (6,)])) == [[1]]
    lip = S.from_generators([(h, 0), (1, h), (0, 1)])
    swapped = S.from_generators([(0, h), (h, 1), (1, 0)])
    W = are_isomorphic(lip, swapped)
    assert W is not None and is_valid_witness(W, lip, swapped)
    assert ambient_matrix(W, lip, swapped) == [[0, 1], [1, 0]]
    # different numbers of minimal generators
    other = S.from_generators([(h, h), (Q(3, 2), 0)])
    assert are_isomorphic(lip, other) is None
    assert are_isomorphic(S.from_generators([(h, h)]), S.from_generators([(Q(3, 2),)])) == [[1]]


def test_isomorphism_rejects_different_rank():
    assert are_isomorphic(S.from_generators([(1, 0), (0, 1)]), S.from_generators([(1, 0), (1, 0)])) is None


def test_search_budget():
    a = S.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1)])
    with pytest.raises(SearchBudgetExceeded):
        are_isomorphic(a, a, budget=0)


@settings(max_examples=30, deadline=None)
@given(gens2, st.sampled_from([[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 1], [0, 1]], [[1, 0], [2, 1]]]))
def test_isomorphism_found_for_unimodular_images(gens, U):
    a = S.from_generators(gens)
    image = [tuple(sum(r * x for r, x in zip(row, g)) for row in U) for g in gens]
    b = S.from_generators(image)
    assume(has_vertex(b))
    W = are_isomorphic(a, b)
    assert W is not None and is_valid_witness(W, a, b, samples=a.generators)
