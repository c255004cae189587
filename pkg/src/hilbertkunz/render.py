"""Static SVG pictures of two-dimensional polycells and their BG cells."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .cone import extreme_rays
from .polycell import SemiOpenPolycell, bounding_box, lattice_points
from .polytope import halfspace_vertices

PALETTE = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"]


def _order_polygon(points):
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def emit_svg(P: SemiOpenPolycell, n: int, decomposition=None, unit: float = 24.0) -> str:
    """SVG of ``n P``: cone edges, shifted-cone edges, lattice points and
    (optionally) the BG cells coloured by class."""
    if P.dim != 2:
        raise ValueError("SVG only for dimension 2")
    (x0, x1), (y0, y1) = bounding_box(P, n)
    x0, y0 = min(x0, 0) - 1, min(y0, 0) - 1
    x1, y1 = x1 + 1, y1 + 1
    width, height = (x1 - x0) * unit, (y1 - y0) * unit

    def px(x, y):
        return (float(x) - x0) * unit, (y1 - float(y)) * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        f"<title>{escape(f'dilation {n} of a semi-open polycell')}</title>",
    ]
    if decomposition is not None:
        h = P.hyperplanes
        a = [tuple(s) for s in h.normals] + [tuple(-c for c in s) for s in h.normals]
        for k, cls in enumerate(decomposition.classes):
            color = PALETTE[k % len(PALETTE)]
            for cell in cls.members_in_P:
                b = [n * c for c in cell.label] + [n * (1 - c) for c in cell.label]
                verts = _order_polygon([tuple(map(float, v)) for v in halfspace_vertices(a, b)])
                pts = " ".join("{:.2f},{:.2f}".format(*px(*v)) for v in verts)
                parts.append(
                    f'<polygon class="bg-cell" data-class="{k}" points="{pts}" '
                    f'fill="{color}" stroke="#555" stroke-width="0.5"/>'
                )
    reach = max(x1 - x0, y1 - y0)
    apexes = [(0, 0, "cone-edge", "#000")] + [
        (n * s[0], n * s[1], "shift-edge", "#c33") for s in P.shifts
    ]
    for ax, ay, cls_name, color in apexes:
        for r in extreme_rays(P.semigroup):
            t = reach / max(abs(r[0]), abs(r[1]))
            xa, ya = px(ax, ay)
            xb, yb = px(ax + t * r[0], ay + t * r[1])
            parts.append(
                f'<line class="{cls_name}" x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" '
                f'y2="{yb:.2f}" stroke="{color}" stroke-width="1"/>'
            )
    for x, y in lattice_points(P, n):
        cx, cy = px(x, y)
        parts.append(f'<circle class="lattice-point" cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="#000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
