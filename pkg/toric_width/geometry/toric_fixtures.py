#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Parameterised Delzant fixtures (CP^2, boxes, Hirzebruch trapezoids, prisms,
corner blow-ups) and the closed forms known for them.
"""

import colorlog
import math

from fractions import Fraction

from toric_width.geometry.toric_delzant import edge_directions_at_vertex
from toric_width.geometry.toric_linalg import dot
from toric_width.geometry.toric_ratgeom import (
    format_rational, make_polytope, parse_rational
)
from toric_width.toric_errors import FixtureError

log = colorlog.getLogger(__name__)

HIRZEBRUCH_REGIONS = (
    "(0,±1)",
    "(±1,0)",
    "p/q < 0",
    "0 < p/q <= 1/n",
    "1/n < p/q <= 2/n",
    "p/q > 2/n",
)


def _positive(value, name):
    value = parse_rational(value)
    if value <= 0:
        raise FixtureError(f"Parameter {name} must be positive, got "
                           f"{format_rational(value)}.")
    return value


def cp2(c=1):
    """
    Moment triangle of (CP^2, c omega): vertices (0,0), (c,0), (0,c).
    """
    c = _positive(c, "c")
    return make_polytope(2, [((0, -1), 0), ((1, 1), c), ((-1, 0), 0)],
                         name=f"cp2(c={format_rational(c)})")


def box(*sides):
    """
    [0, a_1] x ... x [0, a_n]; facets -e_i <= 0 first, then e_i <= a_i.
    """
    if not sides:
        raise FixtureError("box needs at least one side length.")
    sides = [_positive(a, f"a{i + 1}") for i, a in enumerate(sides)]
    n = len(sides)
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    facets = [(tuple(-x for x in e), 0) for e in unit]
    facets += [(e, a) for e, a in zip(unit, sides)]
    label = ",".join(format_rational(a) for a in sides)
    return make_polytope(n, facets, name=f"box({label})")


def hirzebruch(n, a=1, b=1):
    """
    Trapezoid with normals (0,-1), (1,n), (0,1), (-1,0) and offsets
    0, a + n b, b, 0; vertices (0,0), (a+nb,0), (a,b), (0,b).
    """
    n = parse_rational(n)
    if n.denominator != 1 or n < 1:
        raise FixtureError(f"Hirzebruch index n must be a positive integer, "
                           f"got {format_rational(n)}.")
    n = int(n)
    a = _positive(a, "a")
    b = _positive(b, "b")
    return make_polytope(
        2,
        [((0, -1), 0), ((1, n), a + n * b), ((0, 1), b), ((-1, 0), 0)],
        name=f"hirzebruch(n={n},a={format_rational(a)},"
             f"b={format_rational(b)})"
    )


def prism(polygon, height=1):
    """
    polygon x [0, height] in R^3.
    """
    if polygon.dimension != 2:
        raise FixtureError("prism takes a polygon.")
    height = _positive(height, "height")
    facets = [((*facet.normal, 0), facet.offset)
              for facet in polygon.facets]
    facets += [((0, 0, -1), 0), ((0, 0, 1), height)]
    return make_polytope(3, facets, name=f"prism({polygon.label()})")


def blow_up_vertex(polytope, index, size=None):
    """
    Chop the corner at a simple vertex p with the half-space
    <x, sum v_i> <= <p, sum v_i> - size, the sum running over the facets
    active at p. On a Delzant polytope the result is Delzant whenever
    size is below the lattice length of every edge at p; the default is
    half the shortest of them.
    """
    vertex = polytope.vertices[index]
    directions = edge_directions_at_vertex(polytope, index)
    lengths = []
    for direction in directions:
        for other in polytope.vertices:
            difference = [b - a for a, b in zip(vertex.coordinates,
                                                other.coordinates)]
            scale = next((d / e for d, e in zip(difference, direction) if e),
                         None)
            if scale and scale > 0 and all(d == scale * e for d, e in
                                           zip(difference, direction)):
                lengths.append(scale)
    shortest = min(lengths)
    size = shortest / 2 if size is None else parse_rational(size)
    if not 0 < size < shortest:
        raise FixtureError(f"Blow-up size {format_rational(size)} must lie in "
                           f"(0, {format_rational(shortest)}).")
    normal = tuple(sum(polytope.facets[i].normal[k]
                       for i in vertex.active_facets)
                   for k in range(polytope.dimension))
    facets = [(facet.normal, facet.offset) for facet in polytope.facets]
    facets.append((normal, dot(vertex.coordinates, normal) - size))
    return make_polytope(polytope.dimension, facets,
                         name=f"blowup({polytope.label()})")


CATALOG = {
    "cp2": (cp2, ("c",), ()),
    "box": (box, None, ()),
    "hirzebruch": (hirzebruch, ("n", "a", "b"), ("n",)),
}


def parse_params(text):
    """
    "n=2,a=1,b=1" -> {"n": "2", "a": "1", "b": "1"}.
    """
    params = {}
    for item in filter(None, (text or "").split(",")):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise FixtureError(f"Malformed fixture parameter '{item}'.")
        params[key.strip()] = value.strip()
    return params


def build_fixture(name, params):
    """
    Instantiate a catalog fixture from string parameters. Boxes take
    a1, a2, ... in index order.
    """
    if name not in CATALOG:
        raise FixtureError(f"Unknown fixture '{name}'; choose from "
                           f"{', '.join(sorted(CATALOG))}.")
    generator, keys, required = CATALOG[name]
    if keys is None:
        indices = []
        for key in params:
            if not (key.startswith("a") and key[1:].isdigit()):
                raise FixtureError(f"box parameters are a1, a2, ...; got "
                                   f"'{key}'.")
            indices.append(int(key[1:]))
        if sorted(indices) != list(range(1, len(indices) + 1)):
            raise FixtureError("box parameters must be a1..an without gaps.")
        return generator(*(params[f"a{i}"] for i in sorted(indices)))
    unknown = set(params) - set(keys)
    if unknown:
        raise FixtureError(f"Unknown parameter(s) for {name}: "
                           f"{', '.join(sorted(unknown))}.")
    missing = [key for key in required if key not in params]
    if missing:
        raise FixtureError(f"{name}: missing parameter "
                           f"{', '.join(missing)}.")
    log.debug(f"Building fixture {name} with {params}.")
    return generator(**params)


def cp2_closed_form(c, direction):
    """
    (m_u, T_u) = (max{|p|, |p-q|, |q|}, c).
    """
    p, q = direction
    return max(abs(p), abs(p - q), abs(q)), Fraction(c)


def box_closed_form(sides, direction):
    """
    (m_u, T_u) = (||u||_inf, sum a_i |u_i| / ||u||_inf).
    """
    m = max(abs(x) for x in direction)
    width = sum(Fraction(a) * abs(x) for a, x in zip(sides, direction))
    return m, width / m


def hirzebruch_region(n, direction):
    p, q = direction
    if p == 0:
        return HIRZEBRUCH_REGIONS[0]
    if q == 0:
        return HIRZEBRUCH_REGIONS[1]
    ratio = Fraction(p, q)
    if ratio < 0:
        return HIRZEBRUCH_REGIONS[2]
    if ratio <= Fraction(1, n):
        return HIRZEBRUCH_REGIONS[3]
    if ratio <= Fraction(2, n):
        return HIRZEBRUCH_REGIONS[4]
    return HIRZEBRUCH_REGIONS[5]


def hirzebruch_closed_form(n, a, b, direction):
    """
    (m_u, T_u) for the n-th Hirzebruch trapezoid. For n >= 2 the value is
    read off the six-region table; n = 1 uses the general formulas.
    """
    a, b = Fraction(a), Fraction(b)
    p, q = direction
    if n == 1:
        m = max(abs(p), abs(n * p - q), abs(q))
        values = [0, p * (a + n * b), p * a + q * b, q * b]
        return m, (max(values) - min(values)) / m
    region = hirzebruch_region(n, direction)
    if region == HIRZEBRUCH_REGIONS[0]:
        return 1, b
    if region == HIRZEBRUCH_REGIONS[1]:
        return n, (a + n * b) / n
    if region == HIRZEBRUCH_REGIONS[2]:
        m = abs(n * p - q)
        return m, abs(p * a + (n * p - q) * b) / m
    if region == HIRZEBRUCH_REGIONS[3]:
        return abs(q), (abs(p) * a + abs(q) * b) / abs(q)
    if region == HIRZEBRUCH_REGIONS[4]:
        return abs(q), (a + n * b) * abs(p) / abs(q)
    m = abs(n * p - q)
    return m, (a + n * b) * abs(p) / m


def hirzebruch_optimum(n, a, b):
    """
    w_T of the n-th Hirzebruch trapezoid: a + b for n = 1, 2a/n + 2b above.
    """
    a, b = Fraction(a), Fraction(b)
    if n == 1:
        return a + b
    return 2 * a / n + 2 * b


def hirzebruch_maximizer(n):
    g = math.gcd(2, n)
    return 2 // g, n // g
