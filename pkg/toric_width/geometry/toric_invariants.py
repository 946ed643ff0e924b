#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Per-direction invariants of a Delzant polytope and the radius-bounded
toric width search.

    k^u_E  = stabilizer order of S^1_u on points over the edge E
    m_u    = max_E k^u_E
    T_u    = (max <x,u> - min <x,u>) / m_u
    w_T   >= max of T_u over primitive u with ||u||_inf <= R
"""

import colorlog

from dataclasses import dataclass
from joblib import Parallel, delayed

from toric_width.geometry.toric_delzant import require_delzant
from toric_width.geometry.toric_lattice import (
    Parallelepiped, canonical_sign, enumerate_primitive_directions,
    k_via_det2, k_via_pairing, require_primitive, stabilizer_lattice_count
)
from toric_width.geometry.toric_ratgeom import (
    format_point, format_rational, support_extrema
)
from toric_width.toric_errors import (
    DimensionMismatchError, LatticeConsistencyError
)

log = colorlog.getLogger(__name__)

K_METHODS = ("lattice", "pairing")


@dataclass(frozen=True)
class DirectionReport:
    u: tuple
    per_edge_k: dict
    m_u: int
    support_max: object
    support_min: object
    T_u: object
    argmax: int
    argmin: int
    stabilizer_note: str
    validated: bool = True


@dataclass(frozen=True)
class WidthReport:
    radius: int
    best_T: object
    best_directions: tuple
    directions_scanned: int
    lower_bound_statement: str
    scan: tuple = ()
    validated: bool = True


def _require_dimension(polytope, u):
    if len(u) != polytope.dimension:
        raise DimensionMismatchError(
            f"Direction {format_point(u)} has {len(u)} entries; the polytope "
            f"has dimension {polytope.dimension}."
        )


def k_edge(polytope, edge, direction, method="lattice", check=True):
    """
    k^u_E for one edge.

    Args:
        polytope (Polytope): Delzant polytope (or explicitly unvalidated).
        edge (Edge): edge of the polytope.
        direction (Sequence[int]): primitive u.
        method (str): "lattice" counts lattice points in P^u_E;
            "pairing" uses |<u, e>| for the edge direction e.
        check (bool): cross-check the lattice count against the closed
            forms (hard failure in dimension 2, warning above).
    """
    u = require_primitive(direction, "direction")
    _require_dimension(polytope, u)
    if method == "pairing":
        return k_via_pairing(u, edge.direction)
    if method != "lattice":
        raise ValueError(f"Unknown k method '{method}'.")

    normals = [polytope.facets[j].normal for j in sorted(edge.facet_set)]
    cell = Parallelepiped.spanned_by(u, normals)
    k = stabilizer_lattice_count(cell) + 1
    if check:
        if polytope.dimension == 2:
            expected = k_via_det2(u, normals[0])
            if k != expected:
                raise LatticeConsistencyError(
                    f"Edge {edge.endpoints}, u={u}: lattice count gives "
                    f"k={k}, determinant formula gives {expected}."
                )
        elif k != k_via_pairing(u, edge.direction):
            log.warning(f"Edge {edge.endpoints}, u={u}: lattice count k={k}"
                        " differs from the pairing formula "
                        f"{k_via_pairing(u, edge.direction)}.")
    return k


def m_u(polytope, direction, method="lattice", check=True):
    return max(k_edge(polytope, edge, direction, method, check)
               for edge in polytope.edges)


def T_u(polytope, direction, method="lattice", check=True):
    extrema = support_extrema(polytope, direction)
    return (extrema.max - extrema.min) / m_u(polytope, direction, method,
                                              check)


def _stabilizer_note(u, m):
    return (f"m_u = {m} is the largest stabilizer order |stab_p| among "
            f"points outside the fixed set of the circle S^1_u generated by "
            f"u = {format_point(u)}")


def direction_report(polytope, direction, method="lattice", check=True,
                     skip_validation=False):
    """
    Everything known about one direction, u taken in canonical sign.
    """
    require_delzant(polytope, skip_validation)
    u = canonical_sign(require_primitive(direction, "direction"))
    _require_dimension(polytope, u)
    if u != tuple(direction):
        log.info(f"Direction {tuple(direction)} replaced by {u}; T_u and "
                 "m_u do not depend on the sign.")
    per_edge = {edge.endpoints: k_edge(polytope, edge, u, method, check)
                for edge in polytope.edges}
    m = max(per_edge.values())
    extrema = support_extrema(polytope, u)
    return DirectionReport(
        u=u,
        per_edge_k=per_edge,
        m_u=m,
        support_max=extrema.max,
        support_min=extrema.min,
        T_u=(extrema.max - extrema.min) / m,
        argmax=extrema.argmax,
        argmin=extrema.argmin,
        stabilizer_note=_stabilizer_note(u, m),
        validated=not skip_validation,
    )


def _scan_one(polytope, direction, method, check):
    extrema = support_extrema(polytope, direction)
    m = m_u(polytope, direction, method, check)
    return direction, m, (extrema.max - extrema.min) / m


def toric_width_lb(polytope, radius, threads=1, method="lattice", check=True,
                   skip_validation=False):
    """
    Scan every primitive direction with ||u||_inf <= radius and report the
    best T_u with all of its maximizers. The value is a certified lower
    bound for w_T and hence for the Hofer-Zehnder capacity.
    """
    if isinstance(radius, bool) or not isinstance(radius, int) or radius < 1:
        raise ValueError(f"The scan radius must be a positive integer, got "
                         f"{radius!r}.")
    require_delzant(polytope, skip_validation)
    directions = enumerate_primitive_directions(polytope.dimension, radius)
    # cached edges must exist before workers share the polytope
    polytope.edges
    log.debug(f"Scanning {len(directions)} directions of "
              f"{polytope.label()} with {threads} worker(s).")
    if threads > 1:
        scan = Parallel(n_jobs=threads, prefer="threads")(
            delayed(_scan_one)(polytope, u, method, check)
            for u in directions
        )
    else:
        scan = [_scan_one(polytope, u, method, check) for u in directions]

    best = max(t for _, _, t in scan)
    best_directions = tuple(u for u, _, t in scan if t == best)
    statement = (f"c_HZ(M, omega) >= w_T(Delta) >= {format_rational(best)} "
                 f"for {polytope.label()} (primitive directions with "
                 f"||u||_inf <= {radius})")
    if skip_validation:
        statement = f"UNVALIDATED: {statement}"
    return WidthReport(
        radius=radius,
        best_T=best,
        best_directions=best_directions,
        directions_scanned=len(directions),
        lower_bound_statement=statement,
        scan=tuple(scan),
        validated=not skip_validation,
    )
