#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
The AGL(n, Z) action x -> M x + t on polytopes, and the per-direction
equivariance identities k^u_{E'} = k^{M^T u}_E, T_u(M Delta + t) =
T_{M^T u}(Delta).
"""

import colorlog
import numpy as np

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple

from toric_width.geometry.toric_invariants import T_u, k_edge
from toric_width.geometry.toric_linalg import (
    dot, int_determinant, invert, mat_vec, transpose
)
from toric_width.geometry.toric_ratgeom import make_polytope, parse_rational
from toric_width.toric_errors import AffineMapError, PrimitivityError

log = colorlog.getLogger(__name__)


@dataclass(frozen=True)
class UnimodularMap:
    matrix: tuple
    translation: tuple

    def __post_init__(self):
        matrix = tuple(tuple(int(x) for x in row) for row in self.matrix)
        size = len(matrix)
        if size == 0 or any(len(row) != size for row in matrix):
            raise AffineMapError("The linear part must be a square matrix.")
        translation = tuple(parse_rational(x) for x in self.translation)
        if len(translation) != size:
            raise AffineMapError(
                f"Translation has {len(translation)} entries, expected "
                f"{size}."
            )
        det = int_determinant(matrix)
        if abs(det) != 1:
            raise AffineMapError(
                f"det(M) = {det}; the linear part must lie in GL(n, Z)."
            )
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", translation)

    @classmethod
    def identity(cls, dimension):
        return cls(tuple(tuple(int(i == j) for j in range(dimension))
                         for i in range(dimension)),
                   (0,) * dimension)

    @property
    def dimension(self):
        return len(self.matrix)

    @cached_property
    def inverse_matrix(self):
        return tuple(tuple(int(x) for x in row)
                     for row in invert(self.matrix))

    def inverse(self):
        shift = mat_vec(self.inverse_matrix, self.translation)
        return UnimodularMap(self.inverse_matrix, tuple(-x for x in shift))

    def apply_point(self, point):
        return tuple(x + t for x, t in zip(mat_vec(self.matrix, point),
                                           self.translation))

    def pull_back_direction(self, direction):
        """
        u' = M^T u.
        """
        return mat_vec(transpose(self.matrix), direction)


def apply_affine(polytope, affine_map):
    """
    Image of the polytope under x -> M x + t, facet order preserved:
    v_i' = (M^{-1})^T v_i and lambda_i' = lambda_i + <t, v_i'>.
    """
    return _image(polytope, affine_map, polytope.name)


# Polytope equality ignores the name, so the name is part of the key
@lru_cache(maxsize=4096)
def _image(polytope, affine_map, name):
    if affine_map.dimension != polytope.dimension:
        raise AffineMapError(
            f"Map of dimension {affine_map.dimension} applied to a "
            f"{polytope.dimension}-polytope."
        )
    inverse_t = transpose(affine_map.inverse_matrix)
    facets = []
    for facet in polytope.facets:
        normal = mat_vec(inverse_t, facet.normal)
        facets.append((normal, facet.offset
                       + dot(affine_map.translation, normal)))
    try:
        return make_polytope(polytope.dimension, facets, name)
    except PrimitivityError as e:
        raise AffineMapError(f"Lattice not preserved: {e}")


def random_unimodular(dimension, seed, steps):
    """
    Deterministic product of `steps` elementary integer operations (row
    additions with coefficient in [-3, 3], row swaps with a sign flip)
    plus a small rational translation. steps=0 gives the identity.
    """
    if steps < 0:
        raise AffineMapError("steps must be non-negative.")
    if steps == 0:
        return UnimodularMap.identity(dimension)
    rng = np.random.default_rng(seed)
    matrix = [[int(i == j) for j in range(dimension)]
              for i in range(dimension)]
    for _ in range(steps):
        if dimension == 1:
            matrix[0][0] = -matrix[0][0]
            continue
        target, source = (int(x) for x in rng.choice(dimension, 2,
                                                      replace=False))
        if rng.random() < 0.7:
            coefficient = int(rng.integers(-3, 4))
            matrix[target] = [a + coefficient * b
                              for a, b in zip(matrix[target], matrix[source])]
        else:
            matrix[target], matrix[source] = \
                [-x for x in matrix[source]], matrix[target]
    translation = tuple(
        Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 5)))
        for _ in range(dimension)
    )
    return UnimodularMap(tuple(tuple(row) for row in matrix), translation)


class EquivarianceCheck(NamedTuple):
    k_match: bool
    T_match: bool


def check_equivariance(polytope, affine_map, direction, method="lattice",
                       check=True):
    """
    Compare both sides of the affine-invariance identities for one u.
    Edges correspond through their facet index sets.
    """
    image = apply_affine(polytope, affine_map)
    pulled = affine_map.pull_back_direction(direction)
    image_edges = {edge.facet_set: edge for edge in image.edges}

    k_match = len(image_edges) == len(polytope.edges)
    for edge in polytope.edges:
        partner = image_edges.get(edge.facet_set)
        if partner is None:
            k_match = False
            break
        if k_edge(image, partner, direction, method, check) != \
                k_edge(polytope, edge, pulled, method, check):
            k_match = False
            break
    T_match = T_u(image, direction, method, check) == \
        T_u(polytope, pulled, method, check)
    if not (k_match and T_match):
        log.warning(f"Equivariance failed for u={tuple(direction)}: "
                    f"k_match={k_match}, T_match={T_match}.")
    return EquivarianceCheck(k_match, T_match)
