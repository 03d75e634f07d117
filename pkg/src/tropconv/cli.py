"""Command-line front end: ``tropconv <verb> INPUT [options]``.

Inputs are JSON files (``-`` reads standard input).  Results are JSON on
standard output or in the file given with ``-o``; ``render`` writes SVG.
Exit status is 0 on success, 1 for unreadable or malformed input and 2
for domain errors, which are reported on standard error as
``{"error": <class name>, "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classify, curves, hull, linalg, render
from .errors import SchemaError, TropConvError
from .serialization import (
    complex_from_json,
    complex_to_json,
    curve_from_json,
    expect_object,
    halfspace_to_json,
    matrix_from_json,
    polyhedron_from_json,
    polyhedron_to_json,
    rational_from_json,
    rational_to_json,
    vector_from_json,
    vector_to_json,
    vectors_from_json,
)
from .tropical import trop_segment


def _hull_points(data, args):
    pts = vectors_from_json(data)
    cx = hull.tconv_finite(pts)
    if args.refine:
        cx = hull.PolyhedralComplex(tuple(hull.refine_cells(cx.cells)), cx.ambient_dim)
    out = complex_to_json(cx)
    out["dim"] = cx.dim()
    return out


def _hull_segment(data, args):
    d = expect_object(data, {"a", "b"}, {"a", "b"}, "segment")
    a, b = vector_from_json(d["a"]), vector_from_json(d["b"])
    simplex = hull.segment_hull_simplex(a, b)
    return {
        "pseudovertices": [vector_to_json(p) for p in trop_segment(a, b)],
        "simplex_hrep": [halfspace_to_json(h) for h in simplex.ineqs],
        "simplex_eqs": [halfspace_to_json(h) for h in simplex.eqs],
        "dim": hull.dim_tconv_segment(a, b),
    }


def _hull_polyhedron(data, args):
    p = hull.tconv_polyhedron(polyhedron_from_json(data))
    out = polyhedron_to_json(p)
    out["dim"] = p.dim()
    return out


def _hull_complex(data, args):
    cx = hull.tconv_complex(complex_from_json(data), refine=args.refine)
    out = complex_to_json(cx)
    out["dim"] = cx.dim()
    return out


def _hull_ray(data, args):
    d = expect_object(data, {"v", "apex"}, {"v"}, "ray")
    apex = vector_from_json(d["apex"]) if "apex" in d else None
    p = hull.tconv_ray(vector_from_json(d["v"]), apex)
    out = polyhedron_to_json(p)
    out["dim"] = p.dim()
    return out


def _classify_halfspace(data, args):
    d = expect_object(data, {"a", "c"}, {"a"}, "halfspace")
    a = vector_from_json(d["a"])
    c = rational_from_json(d.get("c", 0))
    return classify.classify_halfspace(a, c).to_json()


def _check_convex(data, args):
    return classify.is_tconvex_polyhedron(polyhedron_from_json(data)).to_json()


def _trop_det(data, args):
    r = linalg.trop_det(matrix_from_json(data))
    return {
        "value": rational_to_json(r.value),
        "unique": r.unique,
        "singular": r.singular,
        "argmin": list(r.argmin),
    }


def _trop_rank(data, args):
    M = matrix_from_json(data)
    rank = linalg.trop_rank(M, seed=args.seed)
    return {"rank": rank, "dim_tconv_columns": rank - 1}


def _curve_degree(data, args):
    return {"degree": curves.degree(curve_from_json(data))}


def _curve_check(data, args):
    c = curve_from_json(data)
    if not 0 <= args.chart <= c.ambient:
        raise SchemaError(f"chart index {args.chart} outside 0..{c.ambient}")
    return curves.check_degree_bound(c, chart=args.chart).to_json()


def _render(data, args):
    obj = complex_from_json(data) if isinstance(data, dict) and "cells" in data else polyhedron_from_json(data)
    overlay = vectors_from_json(_load(args.overlay)) if args.overlay else ()
    return render.render_svg(obj, overlay=overlay, bbox=args.bbox)


VERBS = {
    "hull-points": (_hull_points, "tropical hull of a finite point set (JSON list of vectors)"),
    "hull-segment": (_hull_segment, 'pseudovertices and hull simplex of {"a": ..., "b": ...}'),
    "hull-polyhedron": (_hull_polyhedron, "tropical hull of a polyhedron"),
    "hull-complex": (_hull_complex, 'tropical hull of a complex {"cells": [...]}'),
    "hull-ray": (_hull_ray, 'tropical hull of a ray {"v": ..., "apex": ...}'),
    "classify-halfspace": (_classify_halfspace, 'tropical convexity of {"a": ..., "c": ...}'),
    "check-convex": (_check_convex, "tropical convexity of a polyhedron, with witness"),
    "trop-det": (_trop_det, "tropical determinant of a square matrix"),
    "trop-rank": (_trop_rank, "tropical rank of a matrix"),
    "curve-degree": (_curve_degree, "degree of a balanced fan curve"),
    "curve-check": (_curve_check, "degree bound report for a fan curve"),
    "render": (_render, "SVG of a planar polyhedron or complex"),
}


def _bbox(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected x0,y0,x1,y1")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad bounding box {text!r}") from None


class _Parser(argparse.ArgumentParser):
    """Usage errors count as parse errors (exit status 1)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropconv", description="Exact tropical convexity computations.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text, description=help_text)
        p.add_argument("input", help="input JSON file, or - for standard input")
        p.add_argument("-o", "--output", help="write the result here instead of standard output")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized search order")
        p.add_argument("--refine", action="store_true", help="refine overlapping cells")
        p.add_argument("--chart", type=int, default=0, help="coordinate zeroed when charting PT^n")
        p.add_argument("--decimals", action="store_true", help="add decimal approximations for reading")
        if verb == "render":
            p.add_argument("--bbox", type=_bbox, help="clip box x0,y0,x1,y1")
            p.add_argument("--overlay", help="JSON list of points drawn on top")
    return parser


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise SchemaError(f"cannot read {path}: {err}") from None


def _with_decimals(obj):
    """Attach ``"~"`` approximations next to rational strings (display only)."""
    if isinstance(obj, dict):
        return {k: _with_decimals(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_with_decimals(v) for v in obj]
    if isinstance(obj, str) and "/" in obj:
        try:
            return {"exact": obj, "~": round(float(Fraction(obj)), 6)}
        except (ValueError, ZeroDivisionError):
            return obj
    return obj


def _fail(code: int, err: Exception) -> int:
    print(json.dumps({"error": type(err).__name__, "message": str(err)}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = VERBS[args.verb][0]
    try:
        data = _load(args.input)
        result = handler(data, args)
    except SchemaError as err:
        return _fail(1, err)
    except (TropConvError, ValueError) as err:
        return _fail(2, err)
    if isinstance(result, str):
        text = result
    else:
        if args.decimals:
            result = _with_decimals(result)
        text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
