#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
End-to-end numbers for the catalog families and the large randomized
identity checks.
"""

import numpy as np
import pytest

from fractions import Fraction

from toric_width.geometry.toric_affine import (
    apply_affine, check_equivariance, random_unimodular
)
from toric_width.geometry.toric_delzant import SMOOTHNESS, validate_delzant
from toric_width.geometry.toric_fixtures import (
    blow_up_vertex, box, box_closed_form, cp2, hirzebruch,
    hirzebruch_closed_form, hirzebruch_maximizer, prism
)
from toric_width.geometry.toric_invariants import toric_width_lb
from toric_width.geometry.toric_lattice import (
    LatticePolygon, Parallelepiped, convex_hull,
    enumerate_primitive_directions, interior_lattice_count, k_via_det2,
    k_via_pairing, pick_check, stabilizer_lattice_count
)
from toric_width.geometry.toric_ratgeom import make_polytope


@pytest.mark.parametrize("c", [1, 2, Fraction(7, 3)])
def test_cp2_width(c):
    report = toric_width_lb(cp2(c), 8)
    assert report.best_T == c
    assert all(t == c for _, _, t in report.scan)


@pytest.mark.parametrize("a, b", [(1, 2), (3, 5),
                                  (Fraction(1, 2), Fraction(1, 2))])
def test_product_of_spheres_width(a, b):
    report = toric_width_lb(box(a, b), 8)
    assert report.best_T == a + b
    assert (1, 1) in report.best_directions
    for u, m, t in report.scan:
        assert (m, t) == box_closed_form((a, b), u)


def test_first_hirzebruch_surface():
    report = toric_width_lb(hirzebruch(1, 1, 2), 8)
    assert report.best_T == 3
    for u, m, t in report.scan:
        assert (m, t) == hirzebruch_closed_form(1, 1, 2, u)


@pytest.mark.parametrize("n, expected", [
    (2, 3), (3, Fraction(8, 3)), (4, Fraction(5, 2)),
])
def test_hirzebruch_width(n, expected):
    report = toric_width_lb(hirzebruch(n, 1, 1), 8)
    assert report.best_T == expected
    assert report.best_directions == (hirzebruch_maximizer(n),)
    for u, m, t in report.scan:
        assert (m, t) == hirzebruch_closed_form(n, 1, 1, u)


def _planar_instances():
    bases = [cp2(1), cp2(Fraction(7, 3)), box(1, 2)]
    bases += [hirzebruch(n, 1, Fraction(1, 2)) for n in range(1, 6)]
    bases += [blow_up_vertex(box(1, 1), 3), blow_up_vertex(hirzebruch(2), 0)]
    images = [apply_affine(polytope, random_unimodular(2, seed, 3))
              for seed, polytope in enumerate(bases)]
    return bases + images


def _solid_instances():
    return [box(1, 2, 3), box(1, 1, 1), prism(cp2(1)), prism(hirzebruch(3)),
            blow_up_vertex(box(2, 2, 2), 0)]


def _edge_cell(polytope, edge, u):
    normals = [polytope.facets[j].normal for j in sorted(edge.facet_set)]
    return Parallelepiped.spanned_by(u, normals), normals


def test_stabilizer_count_equivalence():
    instances = 0
    planar_directions = enumerate_primitive_directions(2, 6)
    for polytope in _planar_instances():
        assert validate_delzant(polytope).is_delzant
        for u in planar_directions:
            instances += 1
            for edge in polytope.edges:
                cell, normals = _edge_cell(polytope, edge, u)
                k = k_via_pairing(u, edge.direction)
                assert interior_lattice_count(cell) + 1 == k
                assert stabilizer_lattice_count(cell) + 1 == k
                assert k_via_det2(u, normals[0]) == k

    rng = np.random.default_rng(2025)
    solid_directions = enumerate_primitive_directions(3, 6)
    for polytope in _solid_instances():
        assert validate_delzant(polytope).is_delzant
        picks = rng.choice(len(solid_directions), 40, replace=False)
        for index in picks:
            u = solid_directions[int(index)]
            instances += 1
            for edge in polytope.edges:
                cell, _ = _edge_cell(polytope, edge, u)
                assert stabilizer_lattice_count(cell) + 1 == \
                    k_via_pairing(u, edge.direction)
    assert instances >= 1000


@pytest.mark.parametrize("polytope", [
    cp2(1), box(1, 2), hirzebruch(2, 1, 1), hirzebruch(3, Fraction(1, 2), 2),
])
def test_affine_invariance(polytope):
    directions = enumerate_primitive_directions(2, 4)
    for seed in range(100):
        affine_map = random_unimodular(2, seed, 3)
        for u in directions:
            assert all(check_equivariance(polytope, affine_map, u))


def test_random_pick_polygons():
    rng = np.random.default_rng(41)
    checked = 0
    while checked < 200:
        points = rng.integers(-20, 21, size=(int(rng.integers(3, 12)), 2))
        hull = convex_hull(points.tolist())
        if len(hull) < 3:
            continue
        assert pick_check(LatticePolygon(tuple(hull))).identity_holds
        checked += 1


def test_catalog_and_slanted_triangle():
    for polytope in _planar_instances() + _solid_instances():
        assert validate_delzant(polytope).is_delzant
    slanted = make_polytope(2, [((-1, 0), 0), ((0, -1), 0), ((1, 2), 2)])
    violations = validate_delzant(slanted).violations
    assert [v.kind for v in violations] == [SMOOTHNESS]
    assert "(0, 1)" in violations[0].location


def test_box_in_three_dimensions():
    report = toric_width_lb(box(1, 2, 3), 3)
    assert report.best_T == 6
    assert (1, 1, 1) in report.best_directions
    assert all(set(map(abs, u)) == {1} for u in report.best_directions)
    polytope = box(1, 2, 3)
    for u, m, t in report.scan:
        assert (m, t) == box_closed_form((1, 2, 3), u)
        brute = max(
            stabilizer_lattice_count(_edge_cell(polytope, edge, u)[0],
                                     method="box") + 1
            for edge in polytope.edges
        )
        assert brute == m
