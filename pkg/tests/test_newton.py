from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_vertices_2d
from qotoric.errors import EmptySupport, UnboundedDirection
from qotoric.lattice import Cone, Sublattice, dot
from qotoric.newton import (
    dual_newton_diagram,
    exceptional_edges,
    face_is_compact,
    face_of,
    polyhedron_contains,
    polyhedron_from_support,
    separating_weight,
)

Q2 = Cone.orthant(2)
points2 = st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=6)


def test_vertices_of_staircase():
    P = polyhedron_from_support([(0, 3), (1, 1), (3, 0), (2, 2), (1, 2)], Q2)
    assert sorted(P.vertices) == [(0, 3), (1, 1), (3, 0)]
    assert polyhedron_contains(P, (Q(1, 2), 2))
    assert not polyhedron_contains(P, (Q(1, 2), 1))


def test_point_on_edge_is_not_a_vertex():
    P = polyhedron_from_support([(0, 2), (1, 1), (2, 0)], Q2)
    assert sorted(P.vertices) == [(0, 2), (2, 0)]
    assert face_of(P, (1, 1)) == ((0, 2), (1, 1), (2, 0))


@settings(max_examples=80)
@given(points2)
def test_vertices_match_weight_grid(points):
    points = sorted(set(points))
    P = polyhedron_from_support(points, Q2)
    # every vertex of a polygon with coordinates <= 6 is a unique minimiser
    # of some weight with entries <= 13
    assert {tuple(int(x) for x in v) for v in P.vertices} == brute_vertices_2d(points, 13)


@settings(max_examples=50)
@given(points2, st.tuples(st.integers(1, 9), st.integers(1, 9)))
def test_face_is_the_argmin(points, eta):
    P = polyhedron_from_support(points, Q2)
    face = face_of(P, eta)
    low = min(dot(eta, p) for p in points)
    assert face and all(dot(eta, p) == low for p in face)
    assert face_is_compact(P, eta)


@settings(max_examples=50)
@given(points2)
def test_each_vertex_has_an_interior_separating_weight(points):
    P = polyhedron_from_support(points, Q2)
    for v in P.vertices:
        w = separating_weight(v, [p for p in P.points if p != v], Q2)
        assert w is not None and all(x > 0 for x in w)
        assert face_of(P, w) == (v,)


def test_boundary_and_outside_weights():
    P = polyhedron_from_support([(1, 2), (2, 1)], Q2)
    assert not face_is_compact(P, (0, 1))
    assert face_of(P, (0, 1)) == ((2, 1),)
    with pytest.raises(UnboundedDirection):
        face_of(P, (-1, 1))
    with pytest.raises(EmptySupport):
        polyhedron_from_support([], Q2)


def test_dual_diagram_of_staircase():
    P = polyhedron_from_support([(0, 3), (1, 1), (3, 0)], Q2)
    fan = dual_newton_diagram(P, Q2)
    rays = sorted(e.rays[0] for e in fan.edges())
    assert rays == [(0, 1), (1, 0), (1, 2), (2, 1)]
    assert len(fan.maximal_cones) == 3
    assert exceptional_edges(fan, Q2) == [(1, 2), (2, 1)]


def test_exceptional_edges_primitive_in_a_finer_lattice():
    P = polyhedron_from_support([(2, 0), (0, 2)], Q2)
    fan = dual_newton_diagram(P, Q2)
    N = Sublattice.from_generators([(Q(1, 2), Q(1, 2)), (0, 1)], 2)
    assert exceptional_edges(fan, Q2, N) == [(Q(1, 2), Q(1, 2))]


@settings(max_examples=40, deadline=None)
@given(points2)
def test_diagram_is_a_valid_fan_covering_the_quadrant(points):
    P = polyhedron_from_support(points, Q2)
    fan = dual_newton_diagram(P, Q2)
    fan.validate()
    assert len(fan.maximal_cones) == len(P.vertices)
    # every interior weight selects a face that is a face of a maximal cone
    for eta in [(1, 1), (1, 5), (5, 1), (2, 3)]:
        assert any(all(dot(eta, v) <= dot(eta, p) for p in P.points) for v in P.vertices)


def test_three_dimensional_vertices():
    P = polyhedron_from_support([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], Cone.orthant(3))
    assert sorted(P.vertices) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
