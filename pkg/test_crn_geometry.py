#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for Newton polytopes, cone membership and the 2D boundary walk
"""

import random
from fractions import Fraction

import pytest

from conftest import X, XY, XY2, Y, Y3, ZERO
from crn_analysis import (
    ConeClass,
    DegenerateHullError,
    EGraph,
    classify_hull_2d,
    cone_membership,
    newton_polytope,
    on_boundary,
    points_into_relative_interior,
    polytopes_equal,
    subspaces_equal,
    tangent_cone_contains,
)
from crn_analysis.crn_geometry import _strict_hull, cross, is_clockwise


def v(*coords):
    return tuple(Fraction(c) for c in coords)


@pytest.fixture
def square_with_center():
    # sources at the corners of [0,2]^2, the midpoint of the bottom side and the center
    edges = [
        (v(0, 0), v(1, 0)), (v(1, 0), v(2, 0)), (v(2, 0), v(2, 2)),
        (v(2, 2), v(0, 2)), (v(0, 2), v(0, 0)), (v(1, 1), v(0, 0)),
    ]
    return EGraph.from_edges(2, edges)


def test_newton_polytope_of_thomas(thomas):
    P = newton_polytope(thomas[0])
    assert set(P.generators) == {ZERO, X, Y, XY}
    assert P.affine_dim == 2


def test_on_boundary(square_with_center):
    P = newton_polytope(square_with_center)
    assert on_boundary(P, v(0, 0))
    assert on_boundary(P, v(1, 0))
    assert not on_boundary(P, v(1, 1))
    with pytest.raises(ValueError):
        on_boundary(P, v(5, 5))


def test_points_into_relative_interior(thomas):
    P = newton_polytope(thomas[0])
    assert points_into_relative_interior(P, ZERO, v(1, 1))
    assert not points_into_relative_interior(P, ZERO, v(1, 0))
    assert not points_into_relative_interior(P, ZERO, v(-1, 1))
    with pytest.raises(ValueError):
        points_into_relative_interior(P, ZERO, v(0, 0))


def test_points_into_relative_interior_rejects_interior_vertex(square_with_center):
    P = newton_polytope(square_with_center)
    with pytest.raises(ValueError):
        points_into_relative_interior(P, v(1, 1), v(1, 0))


def test_tangent_cone_at_interior_vertex_is_everything(square_with_center):
    P = newton_polytope(square_with_center)
    assert tangent_cone_contains(P, v(1, 1), v(-3, 7))


def test_relative_interior_in_lower_dimension():
    # a segment in the plane: its relative interior is the open segment
    G = EGraph.from_edges(2, [(v(0, 0), v(2, 2)), (v(2, 2), v(0, 0))])
    P = newton_polytope(G)
    assert P.affine_dim == 1
    assert points_into_relative_interior(P, v(0, 0), v(1, 1))
    assert not points_into_relative_interior(P, v(0, 0), v(1, 0))


def test_cone_membership(thomas):
    G = thomas[0]
    assert cone_membership(G, ZERO, v(1, 1)) == ConeClass.INTERIOR
    assert cone_membership(G, ZERO, v(2, 0)) == ConeClass.BOUNDARY
    assert cone_membership(G, ZERO, v(-1, 0)) == ConeClass.OUTSIDE
    assert cone_membership(EGraph.from_edges(2, [(X, Y)]), Y, v(1, 0)) == ConeClass.ZERO_CONE
    with pytest.raises(ValueError):
        cone_membership(G, ZERO, v(0, 0))


def test_polytopes_and_subspaces_equal(thomas):
    G = thomas[0]
    H = EGraph.from_edges(2, [(ZERO, XY), (XY, ZERO), (X, Y), (Y, X)])
    assert polytopes_equal(newton_polytope(G), newton_polytope(H))
    smaller = EGraph.from_edges(2, [(ZERO, X), (X, Y)])
    assert not polytopes_equal(newton_polytope(G), newton_polytope(smaller))
    assert subspaces_equal([v(1, 0), v(0, 1)], [v(1, 1), v(1, -1)], 2)
    assert not subspaces_equal([v(1, 0)], [v(0, 1)], 2)


def test_classify_hull_thomas(thomas):
    H = classify_hull_2d(thomas[0])
    assert H.boundary_cycle == (ZERO, Y, XY, X)
    assert H.corner == (ZERO, Y, XY, X)
    assert H.side == ()
    assert H.interior == ()
    assert is_clockwise(H)


def test_classify_hull_selkov(selkov):
    H = classify_hull_2d(selkov[0])
    assert H.boundary_cycle == (Y, Y3, XY2, X)
    assert H.interior == ()
    assert is_clockwise(H)


def test_classify_hull_with_side_and_interior(square_with_center):
    H = classify_hull_2d(square_with_center)
    assert H.corner == (v(0, 0), v(0, 2), v(2, 2), v(2, 0))
    assert H.side == (v(1, 0),)
    assert H.interior == (v(1, 1),)
    assert H.boundary_cycle == (v(0, 0), v(0, 2), v(2, 2), v(2, 0), v(1, 0))
    prev, nxt, nu = H.side_between[v(1, 0)]
    assert (prev, nxt, nu) == (v(2, 0), v(0, 0), Fraction(1, 2))
    assert H.adjacent_corners(v(0, 0)) == (v(2, 0), v(0, 2))
    assert H.sides_between(v(0, 0), v(2, 0)) == [v(1, 0)]


def test_classify_hull_degenerate():
    G = EGraph.from_edges(2, [(v(0, 0), v(1, 1)), (v(1, 1), v(2, 2))])
    with pytest.raises(DegenerateHullError) as error:
        classify_hull_2d(G)
    assert error.value.dimension == 1


def test_classify_hull_in_three_dimensions():
    # a triangle lying in the plane z = 1
    a, b, c = v(0, 0, 1), v(1, 0, 1), v(0, 1, 1)
    G = EGraph.from_edges(3, [(a, b), (b, c), (c, a)])
    H = classify_hull_2d(G)
    assert set(H.corner) == {a, b, c}
    assert H.boundary_cycle[0] == a


def gift_wrap(points):
    """Counter-clockwise Jarvis march from the lowest point, skipping collinear points"""
    def dist2(a, b):
        return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2

    start = min(points)
    hull, p = [start], start
    while True:
        q = None
        for r in points:
            if r == p:
                continue
            if q is None:
                q = r
                continue
            turn = cross(p, q, r)
            if turn < 0 or (turn == 0 and dist2(p, r) > dist2(p, q)):
                q = r
        if q == start:
            return hull
        hull.append(q)
        p = q


def test_strict_hull_matches_gift_wrapping():
    rng = random.Random(11)
    for _ in range(40):
        points = sorted({v(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(rng.randint(3, 9))})
        if len(points) < 3:
            continue
        assert _strict_hull([(p, p) for p in points]) == gift_wrap(points)
