"""Deterministic SVG drawings of planar polyhedra and complexes.

Unbounded cells are clipped to a bounding box, which is written into the
``<metadata>`` element.  Geometry is exact up to the clipping; floats
appear only when coordinates are printed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import NotTwoDimensional
from .exact import vector
from .hull import PolyhedralComplex, tconv_polyhedron
from .polyhedra import Polyhedron, box, dim, intersect, minkowski_sum
from .tropical import sector

SIZE = 400
PAD = 20
FILLS = ("#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc", "#fc9272", "#c7e9c0")


def _cells(obj) -> list[Polyhedron]:
    if isinstance(obj, Polyhedron):
        cells, n = [obj], obj.ambient_dim
    else:
        cells, n = list(obj.cells), obj.ambient_dim
    if n != 2:
        raise NotTwoDimensional(f"can only draw subsets of R^2, got R^{n}")
    return [c for c in cells if not c.is_empty]


def default_bbox(cells: Sequence[Polyhedron], extra: Sequence = ()) -> tuple:
    """Box around all vertices and extra points, widened by 1 and by 2 more if anything is unbounded."""
    pts = [v for c in cells for v in c.vertices] + [vector(p) for p in extra]
    if not pts:
        return (Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
    margin = 1 + (2 if any(not c.is_bounded() for c in cells) else 0)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


def _ordered(points) -> list:
    if len(points) < 3:
        return sorted(points)
    cx = sum(float(p[0]) for p in points) / len(points)
    cy = sum(float(p[1]) for p in points) / len(points)
    return sorted(points, key=lambda p: (math.atan2(float(p[1]) - cy, float(p[0]) - cx), p))


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(obj, overlay: Sequence = (), bbox: tuple | None = None, title: str = "") -> str:
    """SVG of a 2-D polyhedron or complex, optionally overlaying points."""
    cells = _cells(obj)
    overlay = [vector(p) for p in overlay]
    x0, y0, x1, y1 = [Fraction(t) for t in (bbox or default_bbox(cells, overlay))]
    if x1 <= x0 or y1 <= y0:
        raise ValueError("degenerate bounding box")
    clip = box((x0, y0), (x1, y1))
    scale = (SIZE - 2 * PAD) / float(max(x1 - x0, y1 - y0))

    def sx(p):
        return _fmt(PAD + float(p[0] - x0) * scale)

    def sy(p):
        return _fmt(SIZE - PAD - float(p[1] - y0) * scale)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<metadata>bbox {x0} {y0} {x1} {y1}</metadata>",
    ]
    if title:
        lines.append(f"<title>{title}</title>")
    lines.append(f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>')
    for k, cell in enumerate(cells):
        part = intersect([cell, clip])
        if part.is_empty:
            continue
        pts = _ordered(list(part.vertices))
        colour = FILLS[k % len(FILLS)]
        d = dim(part)
        if d == 2:
            coords = " ".join(f"{sx(p)},{sy(p)}" for p in pts)
            lines.append(
                f'<polygon points="{coords}" fill="{colour}" fill-opacity="0.6" '
                f'stroke="black" stroke-width="1"/>'
            )
        elif d == 1:
            a, b = pts[0], pts[-1]
            lines.append(
                f'<line x1="{sx(a)}" y1="{sy(a)}" x2="{sx(b)}" y2="{sy(b)}" '
                f'stroke="black" stroke-width="2"/>'
            )
        else:
            p = pts[0]
            lines.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="3" fill="black"/>')
    for p in overlay:
        lines.append(f'<circle cx="{sx(p)}" cy="{sy(p)}" r="4" fill="red" stroke="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def figure_panels(p: Polyhedron, bbox: tuple | None = None) -> list[tuple[str, str]]:
    """The sector picture of a planar polyhedron as five named SVG panels.

    Panels: ``P``, ``P + S_0``, ``P + S_1``, ``P + S_2`` and ``tconv P``,
    drawn on a common bounding box.
    """
    if p.ambient_dim != 2:
        raise NotTwoDimensional(f"expected a polyhedron in R^2, got R^{p.ambient_dim}")
    sums = [minkowski_sum(p, sector(j, 2)) for j in range(3)]
    hull = tconv_polyhedron(p)
    bbox = bbox or default_bbox([p, hull])
    out = [("P", render_svg(p, bbox=bbox, title="P"))]
    for j, s in enumerate(sums):
        out.append((f"P+S{j}", render_svg(PolyhedralComplex((s, p), 2), bbox=bbox, title=f"P + S{j}")))
    out.append(("tconv P", render_svg(PolyhedralComplex((hull, p), 2), bbox=bbox, title="tconv P")))
    return out
