"""Deterministic SVG rendering of point configurations.

Fixed scale of 100 user units per penny diameter with a 5% margin, so
identical inputs produce identical bytes (golden-file friendly).
"""

from __future__ import annotations

import math

from .errors import DomainError
from .geom import PointSet
from .pennygraph import PennyGraph, build_penny_graph, closest_neighbor_counts
from .structure import boundary_edges, outer_face

SCALE_PER_DIAMETER = 100.0
MARGIN_FRACTION = 0.05


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


def render_svg(
    ps: PointSet,
    pennies: bool = False,
    highlight_violations: bool = False,
    boundary: bool = False,
) -> str:
    """Vertices as dots and minimum-distance pairs as segments.

    `pennies` adds circles of diameter d around each vertex; `boundary`
    thickens outer-face edges; `highlight_violations` marks vertices with
    more than three closest neighbors and their incident edges.
    """
    graph: PennyGraph | None = None
    if len(ps) >= 2:
        graph = build_penny_graph(ps)
        d = math.sqrt(float(graph.d_squared))
    else:
        d = 1.0
    scale = SCALE_PER_DIAMETER / d

    xs = [float(p.x) * scale for p in ps]
    ys = [-float(p.y) * scale for p in ps]  # SVG y grows downward

    pad = SCALE_PER_DIAMETER * (0.5 if pennies else 0.08)
    min_x, max_x = min(xs) - pad, max(xs) + pad
    min_y, max_y = min(ys) - pad, max(ys) + pad
    width = max(max_x - min_x, 1.0)
    height = max(max_y - min_y, 1.0)
    mx = width * MARGIN_FRACTION
    my = height * MARGIN_FRACTION

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(min_x - mx)} {_fmt(min_y - my)} {_fmt(width + 2 * mx)} {_fmt(height + 2 * my)}">',
    ]

    over_degree: set[int] = set()
    if graph is not None and highlight_violations:
        counts = closest_neighbor_counts(ps)
        over_degree = {i for i, c in enumerate(counts) if c > 3}

    thick: set[tuple[int, int]] = set()
    if graph is not None and boundary:
        try:
            thick = set(boundary_edges(outer_face(graph)))
        except DomainError:
            thick = set()

    if pennies:
        r = SCALE_PER_DIAMETER / 2.0
        for i in range(len(ps)):
            lines.append(
                f'<circle cx="{_fmt(xs[i])}" cy="{_fmt(ys[i])}" r="{_fmt(r)}" '
                'fill="none" stroke="#999999" stroke-width="1"/>'
            )

    if graph is not None:
        for i, j in sorted(graph.edges):
            violating = i in over_degree or j in over_degree
            stroke = "#cc0000" if violating else "#000000"
            width_attr = 6 if (i, j) in thick else 2
            extra = ' stroke-dasharray="6 3"' if violating else ""
            lines.append(
                f'<line x1="{_fmt(xs[i])}" y1="{_fmt(ys[i])}" '
                f'x2="{_fmt(xs[j])}" y2="{_fmt(ys[j])}" '
                f'stroke="{stroke}" stroke-width="{width_attr}"{extra}/>'
            )

    for i in range(len(ps)):
        fill = "#cc0000" if i in over_degree else "#000000"
        lines.append(
            f'<circle cx="{_fmt(xs[i])}" cy="{_fmt(ys[i])}" r="4" fill="{fill}"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
