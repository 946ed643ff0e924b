#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#


class ToricError(ValueError):
    """
    Base class for every domain error raised by the toric width toolkit.
    """


class PolytopeFormatError(ToricError):
    """
    The polytope document (or a programmatic facet list) is malformed.
    """


class PrimitivityError(ToricError):
    """
    An integer vector that must be primitive is not.
    """


class DuplicateFacetError(ToricError):
    pass


class UnboundedPolytopeError(ToricError):
    pass


class EmptyPolytopeError(ToricError):
    pass


class DegeneratePolytopeError(ToricError):
    """
    The polytope is not full-dimensional or one of its half-spaces
    does not cut out a facet.
    """


class NonSimplePolytopeError(ToricError):
    pass


class NonRationalError(ToricError):
    pass


class DelzantValidationError(ToricError):
    """
    Raised by operations that refuse non-Delzant input.
    """
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class LatticeConsistencyError(ToricError):
    """
    A closed-form stabilizer formula disagrees with lattice counting.
    """


class AffineMapError(ToricError):
    pass


class PolygonError(ToricError):
    pass


class ProfileError(ToricError):
    pass


class InfeasibleProfileError(ProfileError):
    pass


class FixtureError(ToricError):
    pass


class DimensionMismatchError(ToricError):
    """
    A direction, map or renderer does not match the polytope dimension.
    """
