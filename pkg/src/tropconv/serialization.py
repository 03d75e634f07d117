"""JSON encoding of the package's values.

Rationals travel as strings ``"p/q"`` (``"p"`` when integral); readers
also accept JSON integers.  Every reader rejects unknown object keys with
:class:`SchemaError`.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import FanCurve
from .errors import SchemaError
from .exact import format_rational, rational
from .hull import PolyhedralComplex
from .polyhedra import Halfspace, Polyhedron
from .tropical import TropPoint


def rational_to_json(q) -> str:
    return format_rational(q)


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise SchemaError(f"expected a rational string or integer, got {x!r}")
    try:
        return rational(x)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError(f"bad rational {x!r}: {err}") from None


def vector_to_json(v) -> list[str]:
    return [rational_to_json(x) for x in v]


def vector_from_json(xs) -> tuple:
    if not isinstance(xs, list) or not xs:
        raise SchemaError(f"expected a nonempty list of rationals, got {xs!r}")
    return tuple(rational_from_json(x) for x in xs)


def vectors_from_json(xss) -> list[tuple]:
    if not isinstance(xss, list):
        raise SchemaError(f"expected a list of vectors, got {xss!r}")
    return [vector_from_json(x) for x in xss]


def expect_object(d, allowed: set, required: set = frozenset(), what: str = "object") -> dict:
    if not isinstance(d, dict):
        raise SchemaError(f"expected a JSON object for {what}")
    extra = set(d) - allowed
    if extra:
        raise SchemaError(f"unknown field(s) in {what}: {sorted(extra)}")
    missing = set(required) - set(d)
    if missing:
        raise SchemaError(f"missing field(s) in {what}: {sorted(missing)}")
    return d


# polyhedra ---------------------------------------------------------------


def halfspace_to_json(h: Halfspace) -> dict:
    return {"a": vector_to_json(h.normal), "c": rational_to_json(h.offset)}


def halfspace_from_json(d) -> Halfspace:
    d = expect_object(d, {"a", "c"}, {"a"}, "halfspace")
    return Halfspace(vector_from_json(d["a"]), rational_from_json(d.get("c", 0)))


def polyhedron_to_json(p: Polyhedron, hrep: bool = True, vrep: bool = True) -> dict:
    out: dict = {"ambient_dim": p.ambient_dim}
    if hrep:
        ineqs, eqs = p.hrep
        out["ineqs"] = [halfspace_to_json(h) for h in ineqs]
        out["eqs"] = [halfspace_to_json(h) for h in eqs]
    if vrep:
        v, r, l = p.vrep
        out["vertices"] = [vector_to_json(x) for x in v]
        out["rays"] = [vector_to_json(x) for x in r]
        out["lineality"] = [vector_to_json(x) for x in l]
    return out


_POLY_KEYS = {"ambient_dim", "ineqs", "eqs", "vertices", "rays", "lineality"}


def polyhedron_from_json(d) -> Polyhedron:
    d = expect_object(d, _POLY_KEYS, what="polyhedron")
    has_h = "ineqs" in d or "eqs" in d
    has_v = "vertices" in d or "rays" in d or "lineality" in d
    if not has_h and not has_v:
        raise SchemaError("polyhedron needs an H- or V-representation")
    n = d.get("ambient_dim")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int) or n < 1):
        raise SchemaError(f"bad ambient_dim {n!r}")
    hrep = vrep = None
    if has_h:
        for key in ("ineqs", "eqs"):
            if not isinstance(d.get(key, []), list):
                raise SchemaError(f"{key} must be a list")
        ineqs = tuple(halfspace_from_json(h) for h in d.get("ineqs", []))
        eqs = tuple(halfspace_from_json(h) for h in d.get("eqs", []))
        hrep = (ineqs, eqs)
        dims = {h.dim for h in ineqs + eqs}
    if has_v:
        v = vectors_from_json(d.get("vertices", []))
        r = vectors_from_json(d.get("rays", []))
        l = vectors_from_json(d.get("lineality", []))
        vrep = (tuple(v), tuple(r), tuple(l))
        dims = (dims if has_h else set()) | {len(x) for x in v + r + l}
    if len(dims) > 1:
        raise SchemaError(f"inconsistent vector lengths {sorted(dims)}")
    if n is None:
        if not dims:
            raise SchemaError("cannot determine ambient_dim")
        n = dims.pop()
    elif dims - {n}:
        raise SchemaError(f"vector lengths {sorted(dims)} do not match ambient_dim {n}")
    if vrep is not None and not vrep[0]:
        if vrep[1] or vrep[2]:
            raise SchemaError("rays or lineality given without a vertex")
        return Polyhedron.empty(n)
    return Polyhedron(n, hrep=hrep, vrep=vrep)


def complex_to_json(c: PolyhedralComplex) -> dict:
    return {"ambient_dim": c.ambient_dim, "cells": [polyhedron_to_json(p) for p in c.cells]}


def complex_from_json(d) -> PolyhedralComplex:
    d = expect_object(d, {"cells", "ambient_dim"}, {"cells"}, "complex")
    if not isinstance(d["cells"], list):
        raise SchemaError("cells must be a list")
    cells = tuple(polyhedron_from_json(c) for c in d["cells"])
    n = d.get("ambient_dim")
    if n is None:
        if not cells:
            raise SchemaError("empty complex needs ambient_dim")
        n = cells[0].ambient_dim
    if any(c.ambient_dim != n for c in cells):
        raise SchemaError("cells of different ambient dimensions")
    return PolyhedralComplex(cells, n)


# other values ------------------------------------------------------------


def trop_point_to_json(p: TropPoint) -> dict:
    return {"coords": vector_to_json(p.normalized)}


def trop_point_from_json(d) -> TropPoint:
    d = expect_object(d, {"coords"}, {"coords"}, "point")
    return TropPoint(TropPoint(vector_from_json(d["coords"])).normalized)


def curve_to_json(c: FanCurve) -> dict:
    return {"ambient": c.ambient, "rays": [{"v": list(v), "m": m} for v, m in c.rays]}


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{what} must be an integer, got {x!r}")
    return x


def curve_from_json(d) -> FanCurve:
    d = expect_object(d, {"ambient", "rays"}, {"ambient", "rays"}, "curve")
    n = _int(d["ambient"], "ambient")
    if not isinstance(d["rays"], list) or not d["rays"]:
        raise SchemaError("rays must be a nonempty list")
    rays = []
    for r in d["rays"]:
        r = expect_object(r, {"v", "m"}, {"v"}, "ray")
        if not isinstance(r["v"], list):
            raise SchemaError("ray generator must be a list")
        v = tuple(_int(x, "generator entry") for x in r["v"])
        m = _int(r.get("m", 1), "multiplicity")
        if m < 1:
            raise SchemaError("multiplicity must be positive")
        if len(v) != n + 1:
            raise SchemaError(f"generator {list(v)} should have {n + 1} entries")
        rays.append((v, m))
    return FanCurve(n, tuple(rays))


def matrix_from_json(d) -> list[list[Fraction]]:
    if not isinstance(d, list) or not d or not all(isinstance(r, list) for r in d):
        raise SchemaError("matrix must be a nonempty array of arrays")
    rows = [[rational_from_json(x) for x in r] for r in d]
    if not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise SchemaError("matrix rows must be nonempty and of equal length")
    return rows
