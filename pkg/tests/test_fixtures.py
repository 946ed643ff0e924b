#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import pytest

from fractions import Fraction

from toric_width.geometry.toric_delzant import validate_delzant
from toric_width.geometry.toric_fixtures import (
    HIRZEBRUCH_REGIONS, blow_up_vertex, box, box_closed_form, build_fixture,
    cp2, cp2_closed_form, hirzebruch, hirzebruch_closed_form,
    hirzebruch_maximizer, hirzebruch_optimum, hirzebruch_region,
    parse_params, prism
)
from toric_width.geometry.toric_invariants import T_u, m_u
from toric_width.geometry.toric_lattice import enumerate_primitive_directions
from toric_width.toric_errors import FixtureError

SIZES = ["1/2", 1, 2, "7/3"]


@pytest.mark.parametrize("c", SIZES)
def test_cp2_family_is_delzant(c):
    assert validate_delzant(cp2(c)).is_delzant


@pytest.mark.parametrize("a", SIZES)
@pytest.mark.parametrize("b", SIZES)
def test_box_family_is_delzant(a, b):
    assert validate_delzant(box(a, b)).is_delzant


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("a, b", [("1/2", 1), (1, 1), (2, "7/3")])
def test_hirzebruch_family_is_delzant(n, a, b):
    assert validate_delzant(hirzebruch(n, a, b)).is_delzant


def test_hirzebruch_vertices():
    polytope = hirzebruch(2, 1, 1)
    assert {v.coordinates for v in polytope.vertices} == \
        {(0, 0), (3, 0), (1, 1), (0, 1)}
    assert polytope.normals == ((0, -1), (1, 2), (0, 1), (-1, 0))


@pytest.mark.parametrize("call", [
    lambda: cp2(0),
    lambda: cp2("-1"),
    lambda: box(),
    lambda: box(1, "-1/2"),
    lambda: hirzebruch(0),
    lambda: hirzebruch("3/2"),
])
def test_invalid_parameters(call):
    with pytest.raises(FixtureError):
        call()


def test_box_rejects_decimal_side():
    # decimals are refused by the rational parser before the range check
    with pytest.raises(ValueError):
        box("1.5")


def test_prism_is_delzant(trapezoid):
    solid = prism(trapezoid, 2)
    assert solid.dimension == 3
    assert len(solid.vertices) == 8
    assert validate_delzant(solid).is_delzant


def test_blow_up_keeps_delzant(unit_square):
    corner = [v.coordinates for v in unit_square.vertices].index((1, 1))
    chopped = blow_up_vertex(unit_square, corner)
    assert len(chopped.vertices) == 5
    assert chopped.facets[-1].normal == (1, 1)
    assert validate_delzant(chopped).is_delzant


def test_blow_up_in_three_dimensions(cube):
    chopped = blow_up_vertex(cube, 0, "1/3")
    assert len(chopped.vertices) == 10
    assert validate_delzant(chopped).is_delzant


def test_blow_up_size_must_fit(unit_square):
    with pytest.raises(FixtureError):
        blow_up_vertex(unit_square, 0, 1)


def test_parse_params():
    assert parse_params("n=2, a=1,b=7/3") == {"n": "2", "a": "1", "b": "7/3"}
    assert parse_params("") == {}
    with pytest.raises(FixtureError):
        parse_params("n2")


def test_build_fixture():
    assert build_fixture("cp2", {"c": "2"}) == cp2(2)
    assert build_fixture("box", {"a2": "2", "a1": "1"}) == box(1, 2)
    assert build_fixture("hirzebruch", {"n": "3"}) == hirzebruch(3, 1, 1)
    for name, params in [("simplex", {}), ("cp2", {"d": "1"}),
                         ("box", {"a1": "1", "a3": "1"}),
                         ("box", {"b": "1"}), ("box", {}),
                         ("hirzebruch", {"a": "1"})]:
        with pytest.raises(FixtureError):
            build_fixture(name, params)


@pytest.mark.parametrize("u", enumerate_primitive_directions(2, 5))
def test_cp2_closed_form(u):
    polytope = cp2(3)
    assert (m_u(polytope, u), T_u(polytope, u)) == cp2_closed_form(3, u)


@pytest.mark.parametrize("u", enumerate_primitive_directions(3, 2))
def test_box_closed_form(u):
    sides = (1, Fraction(1, 2), 3)
    polytope = box(*sides)
    assert (m_u(polytope, u), T_u(polytope, u)) == box_closed_form(sides, u)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hirzebruch_closed_form(n):
    a, b = Fraction(1, 2), Fraction(7, 3)
    polytope = hirzebruch(n, a, b)
    for u in enumerate_primitive_directions(2, 5):
        assert (m_u(polytope, u), T_u(polytope, u)) == \
            hirzebruch_closed_form(n, a, b, u)


@pytest.mark.parametrize("u, region", [
    ((0, 1), HIRZEBRUCH_REGIONS[0]),
    ((1, 0), HIRZEBRUCH_REGIONS[1]),
    ((1, -2), HIRZEBRUCH_REGIONS[2]),
    ((1, 5), HIRZEBRUCH_REGIONS[3]),
    ((1, 3), HIRZEBRUCH_REGIONS[3]),
    ((2, 3), HIRZEBRUCH_REGIONS[4]),
    ((1, 1), HIRZEBRUCH_REGIONS[5]),
])
def test_hirzebruch_region(u, region):
    assert hirzebruch_region(3, u) == region


@pytest.mark.parametrize("n, optimum, maximizer", [
    (1, Fraction(5, 2), None),
    (2, 3, (1, 1)),
    (3, Fraction(7, 3), (2, 3)),
    (4, 2, (1, 2)),
])
def test_hirzebruch_optimum(n, optimum, maximizer):
    a, b = 2, Fraction(1, 2)
    assert hirzebruch_optimum(n, a, b) == optimum
    if maximizer is not None:
        assert hirzebruch_maximizer(n) == maximizer
        assert T_u(hirzebruch(n, a, b), maximizer) == optimum
