#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

import colorlog

from dataclasses import dataclass

from toric_width.geometry.toric_linalg import int_determinant
from toric_width.geometry.toric_ratgeom import (
    format_point, integer_direction, one_faces
)
from toric_width.toric_errors import (
    DelzantValidationError, NonRationalError, NonSimplePolytopeError,
    ToricError
)

log = colorlog.getLogger(__name__)

SIMPLICITY = "simplicity"
RATIONALITY = "rationality"
SMOOTHNESS = "smoothness"
STRUCTURAL = "structural"


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    detail: str

    def __str__(self):
        return f"[{self.kind}] {self.location}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def is_delzant(self):
        return not self.violations


def _incident_faces(polytope):
    incident = {index: [] for index in range(len(polytope.vertices))}
    for i, j, common in one_faces(polytope):
        incident[i].append(j)
        incident[j].append(i)
    return incident


def _outward_directions(polytope, index, neighbours):
    origin = polytope.vertices[index].coordinates
    return sorted(
        integer_direction([b - a for a, b in zip(
            origin, polytope.vertices[other].coordinates)])
        for other in neighbours
    )


def edge_directions_at_vertex(polytope, index):
    """
    The n primitive edge directions pointing from the vertex into its
    incident edges, sorted lexicographically.
    """
    n = polytope.dimension
    vertex = polytope.vertices[index]
    neighbours = _incident_faces(polytope)[index]
    if len(neighbours) != n or len(vertex.active_facets) != n:
        raise NonSimplePolytopeError(
            f"Vertex {format_point(vertex.coordinates)} has "
            f"{len(neighbours)} edges and {len(vertex.active_facets)} "
            f"active facets, expected {n}."
        )
    return _outward_directions(polytope, index, neighbours)


def validate_delzant(polytope):
    """
    Check simplicity, rationality and smoothness at every vertex.

    Args:
        polytope (Polytope): well-formed polytope.

    Returns:
        ValidationReport: every violation, in vertex order. Structural
        failures of the polytope itself become a single violation.
    """
    n = polytope.dimension
    try:
        vertices = polytope.vertices
        incident = _incident_faces(polytope)
    except ToricError as e:
        return ValidationReport((Violation(STRUCTURAL, polytope.label(),
                                           str(e)),))

    violations = []
    for index, vertex in enumerate(vertices):
        location = f"vertex {index} {format_point(vertex.coordinates)}"
        neighbours = incident[index]
        if len(neighbours) != n or len(vertex.active_facets) != n:
            # smoothness is not examined at a non-simple vertex
            violations.append(Violation(
                SIMPLICITY, location,
                f"{len(neighbours)} incident edges and "
                f"{len(vertex.active_facets)} active facets, expected {n}"
            ))
            continue
        try:
            directions = _outward_directions(polytope, index, neighbours)
        except NonRationalError as e:
            violations.append(Violation(RATIONALITY, location, str(e)))
            continue
        det = int_determinant(directions)
        if abs(det) != 1:
            violations.append(Violation(
                SMOOTHNESS, location,
                f"edge directions {', '.join(map(str, directions))} have "
                f"determinant {det}, not a Z-basis"
            ))
    report = ValidationReport(tuple(violations))
    log.debug(f"{polytope.label()}: Delzant={report.is_delzant}, "
              f"{len(violations)} violation(s).")
    return report


def require_delzant(polytope, skip_validation=False):
    """
    Gatekeeper for the width computations.
    """
    if skip_validation:
        log.warning(f"Validation of {polytope.label()} skipped; results are "
                    "unvalidated.")
        return None
    report = validate_delzant(polytope)
    if not report.is_delzant:
        first = "; ".join(str(v) for v in report.violations[:3])
        raise DelzantValidationError(
            f"{polytope.label()} is not a Delzant polytope: {first}",
            report
        )
    return report
