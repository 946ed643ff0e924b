#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Primitive vectors, direction enumeration, lattice-point counting in the
parallelepipeds spanned by a direction and facet normals, and Pick's
theorem for convex lattice polygons.
"""

import colorlog
import math

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from toric_width.geometry.toric_linalg import int_adjugate
from toric_width.toric_errors import PolygonError, PrimitivityError

log = colorlog.getLogger(__name__)

COUNT_METHODS = ("scan", "box")


def make_primitive(vector):
    """
    Split an integer vector into its primitive direction and gcd.

    Args:
        vector (Sequence[int]): non-zero integer vector.

    Returns:
        tuple: (primitive vector, positive integer factor).
    """
    vector = tuple(int(x) for x in vector)
    factor = math.gcd(*vector)
    if factor == 0:
        raise PrimitivityError("The zero vector has no primitive direction.")
    return tuple(x // factor for x in vector), factor


def is_primitive(vector):
    return any(vector) and math.gcd(*vector) == 1


def require_primitive(vector, what="vector"):
    vector = tuple(int(x) for x in vector)
    if not is_primitive(vector):
        raise PrimitivityError(f"The {what} {vector} is not primitive.")
    return vector


def canonical_sign(vector):
    """
    Flip the sign so that the first non-zero entry is positive.
    """
    for x in vector:
        if x:
            return tuple(vector) if x > 0 else tuple(-y for y in vector)
    return tuple(vector)


def enumerate_primitive_directions(dimension, radius):
    """
    All primitive u with ||u||_inf <= radius, one per sign class,
    sorted lexicographically.
    """
    directions = [
        vector
        for vector in product(range(-radius, radius + 1), repeat=dimension)
        if is_primitive(vector) and canonical_sign(vector) == vector
    ]
    log.debug(f"{len(directions)} primitive directions in dimension "
              f"{dimension} within radius {radius}.")
    return sorted(directions)


@dataclass(frozen=True)
class Parallelepiped:
    """
    The parallelepiped {A s : s in [0,1]^n} whose matrix A has the
    generators as columns.
    """
    generators: tuple

    def __post_init__(self):
        generators = tuple(tuple(int(x) for x in g) for g in self.generators)
        if not generators or any(len(g) != len(generators)
                                 for g in generators):
            raise ValueError("A parallelepiped in Z^n needs n generators "
                             "of length n.")
        object.__setattr__(self, "generators", generators)

    @classmethod
    def spanned_by(cls, direction, normals):
        """
        P^u_E: generators u and -v_j for the facet normals v_j of an edge.
        """
        return cls((tuple(direction),)
                   + tuple(tuple(-x for x in normal) for normal in normals))

    @property
    def dimension(self):
        return len(self.generators)

    @property
    def matrix(self):
        return tuple(tuple(g[row] for g in self.generators)
                     for row in range(self.dimension))


def _axis_range(first, last, offset, slope, size, strict):
    """
    Narrow [first, last] to the integers x with
    0 < offset + slope*x < size (0 <= ... when not strict).
    """
    if slope == 0:
        low_ok = offset > 0 if strict else offset >= 0
        return (first, last) if low_ok and offset < size else (1, 0)
    if slope > 0:
        low = -offset // slope + 1 if strict else -(offset // slope)
        high = -((offset - size) // slope) - 1
    else:
        beta = -slope
        low = (offset - size) // beta + 1
        high = -(-offset // beta) - 1 if strict else offset // beta
    return max(first, low), min(last, high)


def _count_cell_points(parallelepiped, strict, method):
    """
    Count k in Z^n with t = A^{-1} k satisfying 0 < t_j < 1 where
    strict[j] holds and 0 <= t_j < 1 otherwise. Exact integer arithmetic:
    t_j * |det A| = (sign(det) * adj(A) k)_j.
    """
    if method not in COUNT_METHODS:
        raise ValueError(f"Unknown counting method '{method}'.")
    matrix = parallelepiped.matrix
    det, adjugate = int_adjugate(matrix)
    if det == 0:
        return 0
    sign = 1 if det > 0 else -1
    size = abs(det)
    rows = [tuple(sign * a for a in row) for row in adjugate]
    lows = [sum(min(x, 0) for x in row) for row in matrix]
    highs = [sum(max(x, 0) for x in row) for row in matrix]

    if method == "box":
        count = 0
        for point in product(*(range(lo, hi + 1)
                               for lo, hi in zip(lows, highs))):
            scaled = [sum(a * k for a, k in zip(row, point)) for row in rows]
            if all((s > 0 if strict_j else s >= 0) and s < size
                   for s, strict_j in zip(scaled, strict)):
                count += 1
        return count

    inner = max(range(len(matrix)), key=lambda r: highs[r] - lows[r])
    outer = [r for r in range(len(matrix)) if r != inner]
    count = 0
    for point in product(*(range(lows[r], highs[r] + 1) for r in outer)):
        first, last = lows[inner], highs[inner]
        for row, strict_j in zip(rows, strict):
            offset = sum(row[r] * k for r, k in zip(outer, point))
            first, last = _axis_range(first, last, offset, row[inner],
                                      size, strict_j)
            if first > last:
                break
        else:
            count += last - first + 1
    return count


def interior_lattice_count(parallelepiped, method="scan"):
    """
    Number of lattice points in the open interior of the parallelepiped;
    0 when the generators are linearly dependent.
    """
    strict = (True,) * parallelepiped.dimension
    return _count_cell_points(parallelepiped, strict, method)


def stabilizer_lattice_count(parallelepiped, method="scan"):
    """
    Number of lattice points A t with t_0 in (0,1) and t_j in [0,1) for
    j >= 1, i.e. the non-identity elements of S^1_u meeting the sub-torus
    spanned by the remaining generators. Equals interior_lattice_count
    whenever the faces of the cell carry no extra lattice points (always
    in dimension 2 for primitive generators).
    """
    strict = (True,) + (False,) * (parallelepiped.dimension - 1)
    return _count_cell_points(parallelepiped, strict, method)


def k_via_det2(direction, normal):
    """
    k^u_E = |det(u, -v)| for a planar edge with facet normal v, and 1 when
    u and v are dependent.
    """
    if len(direction) != 2 or len(normal) != 2:
        raise ValueError("The determinant formula is planar only.")
    u = require_primitive(direction, "direction")
    v = require_primitive(normal, "normal")
    return max(abs(u[0] * -v[1] - u[1] * -v[0]), 1)


def k_via_pairing(direction, edge_direction):
    """
    Fast path: |<u, e>| for the primitive edge direction e, at least 1.
    """
    return max(abs(sum(a * b for a, b in zip(direction, edge_direction))), 1)


def _cross(origin, a, b):
    return ((a[0] - origin[0]) * (b[1] - origin[1])
            - (a[1] - origin[1]) * (b[0] - origin[0]))


def convex_hull(points):
    """
    Strict convex hull (no collinear vertices), counter-clockwise,
    starting from the lexicographically smallest point.
    """
    points = sorted(set((int(x), int(y)) for x, y in points))
    if len(points) <= 2:
        return points

    lower = []
    for point in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], point) <= 0:
            lower.pop()
        lower.append(point)
    upper = []
    for point in reversed(points):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], point) <= 0:
            upper.pop()
        upper.append(point)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class LatticePolygon:
    """
    Strictly convex lattice polygon, vertices counter-clockwise.
    """
    vertices: tuple

    def __post_init__(self):
        vertices = tuple((int(x), int(y)) for x, y in self.vertices)
        if len(vertices) < 3:
            raise PolygonError("A polygon needs at least three vertices.")
        count = len(vertices)
        for i in range(count):
            turn = _cross(vertices[i], vertices[(i + 1) % count],
                          vertices[(i + 2) % count])
            if turn <= 0:
                raise PolygonError(
                    f"Vertices are not in strictly convex counter-clockwise "
                    f"position at {vertices[(i + 1) % count]}."
                )
        # left turns alone admit stars; the fan around the lowest vertex
        # must also sweep monotonically (turning number 1)
        start = vertices.index(min(vertices))
        fan = vertices[start:] + vertices[:start]
        for i in range(1, count - 1):
            if _cross(fan[0], fan[i], fan[i + 1]) <= 0:
                raise PolygonError(
                    f"Vertex cycle winds more than once around "
                    f"{fan[0]}; the polygon is self-intersecting."
                )
        object.__setattr__(self, "vertices", vertices)

    @classmethod
    def from_points(cls, points):
        """
        Accept a vertex cycle in either orientation.
        """
        points = [(int(x), int(y)) for x, y in points]
        twice_area = sum(_cross((0, 0), points[i],
                                points[(i + 1) % len(points)])
                         for i in range(len(points)))
        if twice_area < 0:
            points.reverse()
        return cls(tuple(points))

    def edges(self):
        count = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % count])
                for i in range(count)]


class PickReport(NamedTuple):
    area: Fraction
    interior: int
    boundary: int
    identity_holds: bool


def pick_check(polygon):
    """
    Verify A = i + b/2 - 1 with every term computed independently.
    """
    edges = polygon.edges()
    twice_area = sum(_cross((0, 0), start, end) for start, end in edges)
    area = Fraction(abs(twice_area), 2)
    boundary = sum(math.gcd(end[0] - start[0], end[1] - start[1])
                   for start, end in edges)

    xs = [x for x, _ in polygon.vertices]
    ys = [y for _, y in polygon.vertices]
    interior = sum(
        1
        for point in product(range(min(xs), max(xs) + 1),
                             range(min(ys), max(ys) + 1))
        if all(_cross(start, end, point) > 0 for start, end in edges)
    )
    holds = area == interior + Fraction(boundary, 2) - 1
    return PickReport(area, interior, boundary, holds)
