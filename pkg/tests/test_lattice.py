#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import math
import pytest

from fractions import Fraction
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from toric_width.geometry.toric_lattice import (
    LatticePolygon, Parallelepiped, canonical_sign, convex_hull,
    enumerate_primitive_directions, interior_lattice_count, is_primitive,
    k_via_det2, k_via_pairing, make_primitive, pick_check,
    stabilizer_lattice_count
)
from toric_width.toric_errors import PolygonError, PrimitivityError

small = st.integers(min_value=-6, max_value=6)
vectors2 = st.tuples(small, small).filter(is_primitive)
vectors3 = st.tuples(small, small, small).filter(is_primitive)
coordinates = st.integers(min_value=-20, max_value=20)


@pytest.mark.parametrize("vector, expected", [
    ((2, 4), ((1, 2), 2)),
    ((3, -5), ((3, -5), 1)),
    ((0, -7), ((0, -1), 7)),
])
def test_make_primitive(vector, expected):
    assert make_primitive(vector) == expected


def test_make_primitive_rejects_zero():
    with pytest.raises(PrimitivityError):
        make_primitive((0, 0))


def test_canonical_sign():
    assert canonical_sign((0, -1, 2)) == (0, 1, -2)
    assert canonical_sign((3, -1)) == (3, -1)


@pytest.mark.parametrize("dimension, radius, expected", [
    (2, 1, [(0, 1), (1, -1), (1, 0), (1, 1)]),
    (2, 2, [(0, 1), (1, -2), (1, -1), (1, 0), (1, 1), (1, 2), (2, -1),
            (2, 1)]),
    (1, 3, [(1,)]),
])
def test_enumerate_primitive_directions(dimension, radius, expected):
    assert enumerate_primitive_directions(dimension, radius) == expected


def test_direction_count_at_default_radius():
    # half of 8 * (phi(1) + ... + phi(8))
    assert len(enumerate_primitive_directions(2, 8)) == 88


@pytest.mark.parametrize("dimension", [2, 3])
def test_direction_enumeration_is_nested(dimension):
    for radius in range(1, 4):
        smaller = enumerate_primitive_directions(dimension, radius)
        larger = set(enumerate_primitive_directions(dimension, radius + 1))
        assert set(smaller) <= larger
        for u in smaller:
            assert math.gcd(*u) == 1
            assert canonical_sign(u) == u


@pytest.mark.parametrize("method", ["scan", "box"])
@pytest.mark.parametrize("generators, expected", [
    (((1, -1), (-1, -1)), 1),
    (((1, 0), (-1, -1)), 0),
    (((1, 0), (2, 0)), 0),
    (((1, 2), (-1, 0)), 1),
    (((1, 0), (-1, -3)), 2),
])
def test_interior_lattice_count_planar(generators, expected, method):
    cell = Parallelepiped(generators)
    assert interior_lattice_count(cell, method) == expected


@pytest.mark.parametrize("method", ["scan", "box"])
def test_cube_face_points_count_for_the_stabilizer_only(method):
    # cube edge on the facets x = 1, y = 1 with u = (2, 1, 2): the lattice
    # point (1, 0, 1) = u/2 - e2/2 lies on the face t_1 = 0 of the cell
    cell = Parallelepiped.spanned_by((2, 1, 2), [(1, 0, 0), (0, 1, 0)])
    assert interior_lattice_count(cell, method) == 0
    assert stabilizer_lattice_count(cell, method) == 1
    assert k_via_pairing((2, 1, 2), (0, 0, 1)) == 2


def test_unknown_counting_method():
    with pytest.raises(ValueError):
        interior_lattice_count(Parallelepiped(((1, 0), (0, 1))), "ehrhart")


@pytest.mark.parametrize("u, v, expected", [
    ((1, 0), (1, 3), 3),
    ((1, -1), (1, 1), 2),
    ((1, 0), (1, 0), 1),
    ((1, 0), (-1, 0), 1),
])
def test_k_via_det2(u, v, expected):
    assert k_via_det2(u, v) == expected


def test_k_via_det2_rejects_non_primitive():
    with pytest.raises(PrimitivityError):
        k_via_det2((2, 0), (0, 1))


@pytest.mark.parametrize("u, e, expected", [
    ((1, 0), (-3, 1), 3),
    ((1, 1), (0, 1), 1),
    ((1, 2), (2, -1), 1),
])
def test_k_via_pairing(u, e, expected):
    assert k_via_pairing(u, e) == expected


@settings(deadline=None, max_examples=300)
@given(vectors2, vectors2)
def test_planar_counts_agree(u, v):
    cell = Parallelepiped.spanned_by(u, [v])
    interior = interior_lattice_count(cell)
    assert interior == interior_lattice_count(cell, "box")
    assert interior == stabilizer_lattice_count(cell)
    assert interior + 1 == k_via_det2(u, v)
    edge = (-v[1], v[0])
    assert interior + 1 == k_via_pairing(u, edge)


@settings(deadline=None, max_examples=200)
@given(vectors3)
def test_box_edge_stabilizer_count(u):
    cell = Parallelepiped.spanned_by(u, [(1, 0, 0), (0, 1, 0)])
    count = stabilizer_lattice_count(cell)
    assert count == stabilizer_lattice_count(cell, "box")
    assert count + 1 == k_via_pairing(u, (0, 0, 1))


@settings(deadline=None, max_examples=100)
@given(vectors3, vectors3, vectors3, st.integers(min_value=0, max_value=2))
def test_interior_count_symmetries(a, b, c, flipped):
    generators = [a, b, c]
    count = interior_lattice_count(Parallelepiped(generators))
    assert count == interior_lattice_count(Parallelepiped([c, a, b]))
    generators[flipped] = tuple(-x for x in generators[flipped])
    assert count == interior_lattice_count(Parallelepiped(generators))


def test_convex_hull_drops_interior_and_collinear_points():
    points = [(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1), (0, 1)]
    assert convex_hull(points) == [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_polygon_orientation():
    clockwise = [(0, 0), (0, 1), (1, 1), (1, 0)]
    with pytest.raises(PolygonError):
        LatticePolygon(clockwise)
    polygon = LatticePolygon.from_points(clockwise)
    assert polygon.vertices == ((1, 0), (1, 1), (0, 1), (0, 0))


@pytest.mark.parametrize("vertices", [
    [(0, 0), (1, 0)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)],
    [(0, 10), (-6, -8), (9, 3), (-9, 3), (6, -8)],
])
def test_degenerate_or_concave_polygons(vertices):
    with pytest.raises(PolygonError):
        LatticePolygon.from_points(vertices)
    with pytest.raises(PolygonError):
        LatticePolygon(vertices)


@pytest.mark.parametrize("vertices, area, interior, boundary", [
    ([(0, 0), (1, 0), (1, 1), (0, 1)], 1, 0, 4),
    ([(0, 0), (4, 0), (0, 4)], 8, 3, 12),
    ([(0, 0), (2, 0), (0, 2)], 2, 0, 6),
    ([(0, 0), (3, 1), (1, 2)], Fraction(5, 2), 2, 3),
])
def test_pick_check(vertices, area, interior, boundary):
    report = pick_check(LatticePolygon(vertices))
    assert report.area == area
    assert report.interior == interior
    assert report.boundary == boundary
    assert report.identity_holds


@settings(deadline=None, max_examples=200)
@given(st.lists(st.tuples(coordinates, coordinates), min_size=3,
                max_size=12))
def test_pick_identity_on_random_hulls(points):
    hull = convex_hull(points)
    assume(len(hull) >= 3)
    report = pick_check(LatticePolygon(hull))
    assert report.identity_holds
