#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Exact convex-polytope engine for H-represented polytopes
{x : <x, v_i> <= lambda_i} with primitive integer normals v_i.

Vertices come from exhaustive n-subsets of facets, edges from pairs of
vertices sharing a rank n-1 set of facets. All coordinates are Fractions.
"""

import colorlog
import json
import math
import re

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from toric_width.geometry.toric_lattice import make_primitive
from toric_width.geometry.toric_linalg import (
    affine_rank, dot, invert, mat_vec, rank
)
from toric_width.toric_errors import (
    DegeneratePolytopeError, DimensionMismatchError, DuplicateFacetError,
    EmptyPolytopeError, NonRationalError, NonSimplePolytopeError,
    PolytopeFormatError, PrimitivityError, UnboundedPolytopeError
)

log = colorlog.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/\d+)?$')


def parse_rational(value):
    """
    Parse an exact rational from an integer literal or a "p/q" / "p"
    string. Floats and decimal strings are rejected.
    """
    if isinstance(value, bool):
        raise PolytopeFormatError(f"Expected a rational, got {value!r}.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and RATIONAL_PATTERN.match(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise PolytopeFormatError(f"Zero denominator in {value!r}.")
    raise PolytopeFormatError(
        f"Expected an exact rational ('p/q', 'p' or an integer), got "
        f"{value!r}; decimal floats are not accepted."
    )


def format_rational(value):
    return str(Fraction(value))


def format_point(point):
    return "(" + ", ".join(format_rational(x) for x in point) + ")"


@dataclass(frozen=True)
class HalfSpace:
    normal: tuple
    offset: Fraction

    def evaluate(self, point):
        return dot(self.normal, point)


@dataclass(frozen=True)
class Vertex:
    coordinates: tuple
    active_facets: frozenset


@dataclass(frozen=True)
class Edge:
    endpoints: tuple
    facet_set: frozenset
    direction: tuple


class SupportExtrema(NamedTuple):
    max: Fraction
    min: Fraction
    argmax: int
    argmin: int


@dataclass(frozen=True)
class Polytope:
    """
    Delta = intersection of {x : <x, v_i> <= lambda_i}. Vertices and edges
    are derived lazily and cached; the instance is otherwise immutable.
    """
    dimension: int
    facets: tuple
    name: str = field(default=None, compare=False)
    rescaled_facets: tuple = field(default=(), compare=False)

    @property
    def normals(self):
        return tuple(facet.normal for facet in self.facets)

    @property
    def offsets(self):
        return tuple(facet.offset for facet in self.facets)

    @cached_property
    def vertices(self):
        return tuple(enumerate_vertices(self))

    @cached_property
    def edges(self):
        return tuple(enumerate_edges(self))

    def label(self):
        return self.name or f"{self.dimension}-polytope"


def make_polytope(dimension, facets, name=None, normalize=False):
    """
    Build a Polytope from (normal, offset) pairs with the same checks the
    JSON reader applies.

    Args:
        dimension (int): ambient dimension n.
        facets (Iterable): (normal, offset) pairs; offsets exact rationals.
        name (str): optional label.
        normalize (bool): divide non-primitive normals (and their offsets)
            by the gcd instead of rejecting them.
    """
    if isinstance(dimension, bool) or not isinstance(dimension, int) \
            or dimension < 1:
        raise PolytopeFormatError(
            f"Dimension must be a positive integer, got {dimension!r}."
        )
    halfspaces = []
    rescaled = []
    seen = {}
    for index, (normal, offset) in enumerate(facets):
        if len(normal) != dimension:
            raise PolytopeFormatError(
                f"Facet {index}: normal {tuple(normal)} has {len(normal)} "
                f"entries, expected {dimension}."
            )
        if any(isinstance(x, bool) or not isinstance(x, int)
               for x in normal):
            raise PolytopeFormatError(
                f"Facet {index}: normal entries must be integers."
            )
        normal = tuple(normal)
        if not any(normal):
            raise PolytopeFormatError(f"Facet {index}: zero normal.")
        offset = parse_rational(offset)
        primitive, factor = make_primitive(normal)
        if factor != 1:
            if not normalize:
                raise PrimitivityError(
                    f"Facet {index}: normal {normal} is not primitive "
                    f"(gcd {factor})."
                )
            log.info(f"Facet {index}: normal {normal} rescaled to "
                     f"{primitive} by gcd {factor}.")
            normal, offset = primitive, offset / factor
            rescaled.append(index)
        if normal in seen:
            raise DuplicateFacetError(
                f"Facet {index} repeats the normal {normal} of facet "
                f"{seen[normal]}."
            )
        seen[normal] = index
        halfspaces.append(HalfSpace(normal, offset))
    if not halfspaces:
        raise PolytopeFormatError("A polytope needs at least one facet.")
    return Polytope(dimension, tuple(halfspaces), name, tuple(rescaled))


def polytope_from_dict(document, normalize=None):
    if not isinstance(document, dict):
        raise PolytopeFormatError("A polytope document is a JSON object.")
    raw_facets = document.get("facets")
    if not isinstance(raw_facets, list):
        raise PolytopeFormatError("'facets' must be a list.")
    name = document.get("name")
    if name is not None and not isinstance(name, str):
        raise PolytopeFormatError("'name' must be a string.")
    if normalize is None:
        normalize = document.get("normalize", False)
    if not isinstance(normalize, bool):
        raise PolytopeFormatError("'normalize' must be a boolean.")
    pairs = []
    for index, raw in enumerate(raw_facets):
        if not isinstance(raw, dict) or "normal" not in raw \
                or "offset" not in raw:
            raise PolytopeFormatError(
                f"Facet {index}: expected an object with 'normal' and "
                "'offset'."
            )
        if not isinstance(raw["normal"], list):
            raise PolytopeFormatError(f"Facet {index}: 'normal' is a list.")
        try:
            offset = parse_rational(raw["offset"])
        except PolytopeFormatError as e:
            raise PolytopeFormatError(f"Facet {index}: {e}")
        pairs.append((raw["normal"], offset))
    return make_polytope(document.get("dimension"), pairs, name, normalize)


def parse_polytope(text, normalize=None):
    """
    Read the JSON polytope format:
    {"name"?, "dimension": n, "facets": [{"normal": [...],
    "offset": "p/q"}], "normalize"?}
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolytopeFormatError(f"Malformed polytope document: {e}")
    return polytope_from_dict(document, normalize)


def polytope_to_dict(polytope):
    document = {}
    if polytope.name:
        document["name"] = polytope.name
    document["dimension"] = polytope.dimension
    document["facets"] = [
        {"normal": list(facet.normal),
         "offset": format_rational(facet.offset)}
        for facet in polytope.facets
    ]
    return document


def enumerate_vertices(polytope):
    """
    All vertices, each with its full active-facet set, sorted
    lexicographically by coordinates.
    """
    n = polytope.dimension
    facets = polytope.facets
    normals = polytope.normals
    if rank(normals) < n:
        raise UnboundedPolytopeError(
            f"The normals span a subspace of dimension {rank(normals)} < {n};"
            " the polytope contains a line."
        )

    # (axis, sign) pairs shown to lie in the cone of the normals
    covered = set()
    solutions = {}
    for subset in combinations(range(len(facets)), n):
        inverse = invert([normals[i] for i in subset])
        if inverse is None:
            continue
        for axis, row in enumerate(inverse):
            if all(x >= 0 for x in row):
                covered.add((axis, 1))
            if all(x <= 0 for x in row):
                covered.add((axis, -1))
        point = mat_vec(inverse, [facets[i].offset for i in subset])
        if point in solutions:
            continue
        if all(facet.evaluate(point) <= facet.offset for facet in facets):
            solutions[point] = frozenset(
                i for i, facet in enumerate(facets)
                if facet.evaluate(point) == facet.offset
            )

    if len(covered) < 2 * n:
        missing = sorted(set((axis, sign) for axis in range(n)
                             for sign in (1, -1)) - covered)
        raise UnboundedPolytopeError(
            "The normals do not positively span R^n (no non-negative "
            f"combination reaches {missing}); the polytope is unbounded."
        )
    if not solutions:
        raise EmptyPolytopeError(
            f"The inequalities of {polytope.label()} have no common solution."
        )

    vertices = [Vertex(point, solutions[point]) for point in sorted(solutions)]
    points = [v.coordinates for v in vertices]
    if affine_rank(points) < n:
        raise DegeneratePolytopeError(
            f"{polytope.label()} is not full-dimensional."
        )
    for index, facet in enumerate(facets):
        on_facet = [v.coordinates for v in vertices
                    if index in v.active_facets]
        if not on_facet or affine_rank(on_facet) < n - 1:
            raise DegeneratePolytopeError(
                f"Facet {index} (normal {facet.normal}, offset "
                f"{format_rational(facet.offset)}) does not cut out a facet."
            )
    log.debug(f"{polytope.label()}: {len(vertices)} vertices from "
              f"{len(facets)} facets.")
    return vertices


def one_faces(polytope):
    """
    All 1-faces as (i, j, common facets) with i < j, regardless of
    simplicity.
    """
    n = polytope.dimension
    normals = polytope.normals
    vertices = polytope.vertices
    faces = []
    for i, j in combinations(range(len(vertices)), 2):
        common = vertices[i].active_facets & vertices[j].active_facets
        if len(common) < n - 1:
            continue
        if n > 1 and rank([normals[k] for k in common]) != n - 1:
            continue
        faces.append((i, j, common))
    return faces


def integer_direction(difference):
    """
    Primitive integer vector with the direction of a rational difference.
    """
    scale = math.lcm(*(Fraction(x).denominator for x in difference))
    scaled = [Fraction(x) * scale for x in difference]
    if any(x.denominator != 1 for x in scaled):
        raise NonRationalError(
            f"Edge direction {format_point(difference)} is not rational."
        )
    return make_primitive([int(x) for x in scaled])[0]


def enumerate_edges(polytope):
    """
    All edges with their facet sets J_E (exactly n-1 facets each) and
    primitive directions oriented from the first endpoint to the second.
    """
    n = polytope.dimension
    vertices = polytope.vertices
    edges = []
    for i, j, common in one_faces(polytope):
        if len(common) != n - 1:
            raise NonSimplePolytopeError(
                f"The 1-face between vertices "
                f"{format_point(vertices[i].coordinates)} and "
                f"{format_point(vertices[j].coordinates)} lies on "
                f"{len(common)} facets, expected {n - 1}."
            )
        difference = [b - a for a, b in zip(vertices[i].coordinates,
                                             vertices[j].coordinates)]
        edges.append(Edge((i, j), common, integer_direction(difference)))
    log.debug(f"{polytope.label()}: {len(edges)} edges.")
    return edges


def support_extrema(polytope, direction):
    """
    Exact max and min of <x, u> over the polytope, attained at vertices;
    ties go to the lexicographically smallest vertex.
    """
    direction = tuple(direction)
    if len(direction) != polytope.dimension:
        raise DimensionMismatchError(
            f"Direction {direction} does not match dimension "
            f"{polytope.dimension}."
        )
    if not any(direction):
        raise PrimitivityError("The zero vector has no support extrema.")
    values = [dot(v.coordinates, direction) for v in polytope.vertices]
    top = max(values)
    bottom = min(values)
    return SupportExtrema(top, bottom, values.index(top), values.index(bottom))
