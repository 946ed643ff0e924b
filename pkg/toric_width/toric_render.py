#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Text, JSON, Markdown and SVG renderings of the engine's reports.
Rationals always leave this module as exact "p/q" strings.
"""

import json
import math

from fractions import Fraction
from xml.sax.saxutils import escape

from toric_width.geometry.toric_fixtures import (
    HIRZEBRUCH_REGIONS, hirzebruch_closed_form, hirzebruch_region
)
from toric_width.geometry.toric_ratgeom import format_point, format_rational
from toric_width.toric_errors import (
    DimensionMismatchError, PolytopeFormatError
)

SVG_SIZE = 480
SVG_MARGIN = 60


def to_json(document):
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def validation_to_dict(polytope, report):
    return {
        "name": polytope.label(),
        "is_delzant": report.is_delzant,
        "violations": [
            {"kind": v.kind, "location": v.location, "detail": v.detail}
            for v in report.violations
        ],
    }


def render_validation(polytope, report):
    if report.is_delzant:
        return f"{polytope.label()}: Delzant polytope\n"
    lines = [f"{polytope.label()}: NOT Delzant "
             f"({len(report.violations)} violation(s))"]
    lines += [f"  {violation}" for violation in report.violations]
    return "\n".join(lines) + "\n"


def direction_report_to_dict(polytope, report):
    vertices = polytope.vertices
    return {
        "u": list(report.u),
        "per_edge_k": [
            {"endpoints": [format_point(vertices[i].coordinates),
                           format_point(vertices[j].coordinates)],
             "k": k}
            for (i, j), k in sorted(report.per_edge_k.items())
        ],
        "m_u": report.m_u,
        "support_max": format_rational(report.support_max),
        "support_min": format_rational(report.support_min),
        "argmax": format_point(vertices[report.argmax].coordinates),
        "argmin": format_point(vertices[report.argmin].coordinates),
        "T_u": format_rational(report.T_u),
        "stabilizer_note": report.stabilizer_note,
        "validated": report.validated,
    }


def render_direction(polytope, report):
    document = direction_report_to_dict(polytope, report)
    lines = [
        f"{polytope.label()}, u = {format_point(report.u)}",
        f"  m_u = {report.m_u}",
        f"  max <x,u> = {document['support_max']} at {document['argmax']}",
        f"  min <x,u> = {document['support_min']} at {document['argmin']}",
        f"  T_u = {document['T_u']}",
    ]
    lines += [f"  k = {item['k']} on edge {item['endpoints'][0]} -- "
              f"{item['endpoints'][1]}" for item in document["per_edge_k"]]
    lines.append(f"  {report.stabilizer_note}")
    if not report.validated:
        lines.append("  UNVALIDATED input")
    return "\n".join(lines) + "\n"


def width_report_to_dict(report, full=False):
    document = {
        "radius": report.radius,
        "best_T": format_rational(report.best_T),
        "best_directions": [list(u) for u in report.best_directions],
        "directions_scanned": report.directions_scanned,
        "lower_bound_statement": report.lower_bound_statement,
        "validated": report.validated,
    }
    if full:
        document["scan"] = [
            {"u": list(u), "m_u": m, "T_u": format_rational(t)}
            for u, m, t in report.scan
        ]
    return document


def render_width(report, full=False):
    lines = [
        f"best T_u = {format_rational(report.best_T)} "
        f"(radius {report.radius}, {report.directions_scanned} directions)",
        "maximizers: " + ", ".join(format_point(u)
                                   for u in report.best_directions),
        report.lower_bound_statement,
    ]
    if full:
        lines += [f"  u = {format_point(u)}: m_u = {m}, "
                  f"T_u = {format_rational(t)}" for u, m, t in report.scan]
    return "\n".join(lines) + "\n"


def _is_rational_string(value):
    try:
        Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        return False
    return isinstance(value, str) and "." not in value


def check_width_document(document):
    """
    Structural check of `width --json` output; raises on the first
    problem found.
    """
    required = {
        "radius": int, "best_T": str, "best_directions": list,
        "directions_scanned": int, "lower_bound_statement": str,
        "validated": bool,
    }
    if not isinstance(document, dict):
        raise PolytopeFormatError("A width document is a JSON object.")
    for key, kind in required.items():
        if not isinstance(document.get(key), kind):
            raise PolytopeFormatError(f"Field '{key}' missing or not "
                                      f"{kind.__name__}.")
    if not _is_rational_string(document["best_T"]):
        raise PolytopeFormatError("best_T is not an exact rational string.")
    directions = document["best_directions"]
    if not directions or any(
            not isinstance(u, list) or not u
            or not all(isinstance(x, int) for x in u) for u in directions):
        raise PolytopeFormatError("best_directions must be a non-empty list "
                                  "of integer vectors.")
    if directions != sorted(directions):
        raise PolytopeFormatError("best_directions are not sorted.")
    for row in document.get("scan", []):
        if not _is_rational_string(row.get("T_u")) \
                or not isinstance(row.get("m_u"), int):
            raise PolytopeFormatError(f"Malformed scan row {row!r}.")
    return True


def pick_to_dict(polygon, report):
    return {
        "vertices": [list(v) for v in polygon.vertices],
        "area": format_rational(report.area),
        "interior": report.interior,
        "boundary": report.boundary,
        "identity_holds": report.identity_holds,
    }


def render_pick(polygon, report):
    return (f"A = {format_rational(report.area)}, i = {report.interior}, "
            f"b = {report.boundary}: A = i + b/2 - 1 "
            f"{'holds' if report.identity_holds else 'FAILS'}\n")


def render_table(polytope, rows, hirzebruch=None):
    """
    Markdown table of (u, m_u, T_u). With `hirzebruch=(n, a, b)` the rows
    are grouped by the p/q regions and compared with the closed forms.
    """
    lines = [f"# Per-direction analysis of {polytope.label()}", ""]
    if hirzebruch is None:
        lines += ["| u | m_u | T_u |", "|---|---|---|"]
        lines += [f"| {format_point(u)} | {m} | {format_rational(t)} |"
                  for u, m, t in rows]
        return "\n".join(lines) + "\n"

    n, a, b = hirzebruch
    lines += ["| region | u | m_u | T_u | closed form |",
              "|---|---|---|---|---|"]
    order = {region: i for i, region in enumerate(HIRZEBRUCH_REGIONS)}
    grouped = sorted(
        rows, key=lambda row: (order[hirzebruch_region(n, row[0])], row[0])
    )
    for u, m, t in grouped:
        expected = hirzebruch_closed_form(n, a, b, u)
        verdict = "match" if expected == (m, t) else (
            f"MISMATCH ({expected[0]}, {format_rational(expected[1])})")
        lines.append(f"| {hirzebruch_region(n, u)} | {format_point(u)} | "
                     f"{m} | {format_rational(t)} | {verdict} |")
    return "\n".join(lines) + "\n"


def _cycle(polytope):
    neighbours = {i: [] for i in range(len(polytope.vertices))}
    for edge in polytope.edges:
        i, j = edge.endpoints
        neighbours[i].append(j)
        neighbours[j].append(i)
    cycle = [0]
    previous = None
    while len(cycle) < len(neighbours):
        current = cycle[-1]
        step = min(x for x in neighbours[current] if x != previous)
        previous = current
        cycle.append(step)
    return cycle


def render_svg(polytope, best_directions=()):
    """
    Deterministic SVG of a polygon: outline, exact vertex labels, and an
    arrow from the centroid along each best direction.
    """
    if polytope.dimension != 2:
        raise DimensionMismatchError(f"SVG rendering needs a polygon, got "
                                     f"dimension {polytope.dimension}.")
    points = [v.coordinates for v in polytope.vertices]
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    scale = Fraction(SVG_SIZE - 2 * SVG_MARGIN) / span

    def screen(point):
        x = (point[0] - min(xs)) * scale + SVG_MARGIN
        y = SVG_SIZE - SVG_MARGIN - (point[1] - min(ys)) * scale
        return f"{float(x):.3f}", f"{float(y):.3f}"

    outline = " ".join(",".join(screen(points[i]))
                       for i in _cycle(polytope))
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        '<defs><marker id="head" markerWidth="10" markerHeight="10" '
        'refX="8" refY="5" orient="auto"><path d="M0,0 L10,5 L0,10 z" '
        'fill="#c0392b"/></marker></defs>',
        f'<title>{escape(polytope.label())}</title>',
        f'<polygon points="{outline}" fill="#dddddd" stroke="#000000" '
        'stroke-width="2"/>',
    ]
    for point in points:
        x, y = screen(point)
        parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="#000000"/>')
        parts.append(f'<text x="{x}" y="{y}" dx="6" dy="-6" '
                     f'font-family="monospace" font-size="12">'
                     f'{format_point(point)}</text>')
    centroid = [sum(c) / len(points) for c in zip(*points)]
    cx, cy = screen(centroid)
    for u in best_directions:
        length = 0.3 * span / math.hypot(*u)
        tip = screen([c + Fraction(length) * x for c, x in zip(centroid, u)])
        parts.append(f'<line x1="{cx}" y1="{cy}" x2="{tip[0]}" y2="{tip[1]}" '
                     'stroke="#c0392b" stroke-width="2" '
                     'marker-end="url(#head)"/>')
        parts.append(f'<text x="{tip[0]}" y="{tip[1]}" dx="4" dy="12" '
                     'font-family="monospace" font-size="12" '
                     f'fill="#c0392b">u = {format_point(u)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
