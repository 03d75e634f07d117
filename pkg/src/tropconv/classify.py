"""Tropical convexity of halfspaces, linear spaces and polyhedra.

Min-plus combinations commute with translation, so only the linear part
of a halfspace ``a.x >= c`` matters; everything below reduces to the
homogeneous halfspace ``{a.x >= 0}`` and its Minkowski sums with the
sectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NotLinear, ZeroNormal
from .exact import Vector, add, distinct_nonzero, dot, scale, sub, vector, zero
from .polyhedra import Halfspace, Polyhedron, dd_convert, dim, intersect, remove_redundancy
from .tropical import homogenize, sector_generators, trop_segment

UNCHANGED = "unchanged"
ALL_OF_SPACE = "all"


@dataclass(frozen=True)
class HalfspaceVerdict:
    convex: bool
    witness_sector: int | None = None
    case: str | None = None  # "I" or "II"

    def to_json(self) -> dict:
        return {"convex": self.convex, "case": self.case, "witness_sector": self.witness_sector}


def _normal(a) -> Vector:
    a = vector(a)
    if not any(a):
        raise ZeroNormal("halfspace normal is the zero vector")
    return a


def halfspace_plus_sector(a: Sequence, j: int) -> str:
    """``{a.x >= 0} + S_j``: unchanged when ``S_j`` lies in the halfspace, else all of space."""
    a = _normal(a)
    gens = sector_generators(j, len(a))
    return UNCHANGED if all(dot(a, g) >= 0 for g in gens) else ALL_OF_SPACE


def classify_halfspace_by_sectors(a: Sequence) -> HalfspaceVerdict:
    """Reference route: try every sector generator set."""
    a = _normal(a)
    for j in range(len(a) + 1):
        if halfspace_plus_sector(a, j) == UNCHANGED:
            return HalfspaceVerdict(True, j, "I" if j == 0 else "II")
    return HalfspaceVerdict(False)


def classify_halfspace(a: Sequence, c=0) -> HalfspaceVerdict:
    """Closed-form verdict for ``{a.x >= c}``; ``c`` does not influence it.

    Case I: every ``a_k <= 0`` (witness sector 0).  Case II: exactly one
    positive entry ``a_j`` and ``sum(a) >= 0`` (witness sector ``j``).
    Otherwise the tropical hull is all of space.
    """
    a = _normal(a)
    positive = [k for k, x in enumerate(a) if x > 0]
    if not positive:
        return HalfspaceVerdict(True, 0, "I")
    if len(positive) == 1 and sum(a) >= 0:
        return HalfspaceVerdict(True, positive[0] + 1, "II")
    return HalfspaceVerdict(False)


# --------------------------------------------------------------------------
# linear spaces


@dataclass(frozen=True)
class LinearSpaceVerdict:
    """Outcome of :func:`is_tconvex_linear_space`.

    ``hyperplanes`` (for a Yes) are equations ``x_i - x_j = 0`` or
    ``x_k = 0`` cutting out the space; ``witness`` (for a No) is a point of
    the space with more distinct nonzero coordinates than its dimension.
    """

    convex: bool
    hyperplanes: tuple = ()
    witness: Vector | None = None


def _coordinate_classes(basis: Sequence[Vector], n: int) -> list[list[int]]:
    """Partition homogeneous indices 0..n by their values on the basis (index 0 is constant 0)."""
    sig = {}
    for k in range(n + 1):
        key = tuple(Fraction(0) if k == 0 else b[k - 1] for b in basis)
        sig.setdefault(key, []).append(k)
    return sorted(sig.values())


def _generic_point(basis: Sequence[Vector], n: int, seed: int = 0) -> Vector:
    rng = random.Random(seed)
    target = len(_coordinate_classes(basis, n)) - 1
    best = zero(n)
    for _ in range(200):
        x = zero(n)
        for b in basis:
            x = add(x, scale(Fraction(rng.randint(-50, 50), rng.randint(1, 7)), b))
        if distinct_nonzero(x) == target:
            return x
        if distinct_nonzero(x) > distinct_nonzero(best):
            best = x
    return best


def _linear_basis(L: Polyhedron) -> tuple[Vector, ...]:
    L = remove_redundancy(dd_convert(L))
    if L.is_empty:
        raise NotLinear("empty set is not a linear space")
    if L.ineqs or any(e.offset != 0 for e in L.eqs):
        raise NotLinear("expected equations through the origin only")
    return L.lineality


def is_tconvex_linear_space(L: Polyhedron, seed: int = 0) -> LinearSpaceVerdict:
    """Decide whether a linear subspace is an intersection of hyperplanes
    ``x_i = x_j`` and ``x_k = 0``.

    Coordinates (with the hidden coordinate 0) that agree on every vector
    of the space form classes; the space lies in the hyperplanes tying
    each class together and it equals their intersection exactly when its
    dimension is one less than the number of classes.
    """
    n = L.ambient_dim
    basis = _linear_basis(L)
    classes = _coordinate_classes(basis, n)
    if len(basis) == len(classes) - 1:
        hyper = []
        for cls in classes:
            if cls[0] == 0:
                for k in cls[1:]:
                    a = [0] * n
                    a[k - 1] = 1
                    hyper.append(Halfspace(a, 0))
            else:
                for k in cls[1:]:
                    a = [0] * n
                    a[cls[0] - 1] = 1
                    a[k - 1] = -1
                    hyper.append(Halfspace(a, 0))
        return LinearSpaceVerdict(True, tuple(hyper))
    return LinearSpaceVerdict(False, witness=_generic_point(basis, n, seed))


# --------------------------------------------------------------------------
# polyhedra


@dataclass(frozen=True)
class PolyhedronVerdict:
    """``witness`` is ``(x, y, q)``: two points of the polyhedron and a
    pseudovertex ``q`` of their tropical segment lying outside it."""

    convex: bool
    witness: tuple | None = None
    failing: tuple = field(default=(), compare=False)

    def to_json(self) -> dict:
        from .serialization import vector_to_json

        return {
            "convex": self.convex,
            "case": None,
            "witness_sector": None,
            "witness_points": None if self.witness is None else [vector_to_json(v) for v in self.witness],
        }


def _projection(classes: list[list[int]]):
    """Coordinates kept by the coordinate-deleting projection: one per non-zero class."""
    return [cls[0] - 1 for cls in classes if cls[0] != 0]


def _halfspaces_verdict(p: Polyhedron) -> tuple[bool, tuple]:
    """Full-dimensional ``p``: classify every facet halfspace."""
    bad = tuple(h for h in p.ineqs if not classify_halfspace(h.normal, h.offset).convex)
    return not bad, bad


def _decide(p: Polyhedron) -> tuple[bool, tuple]:
    n = p.ambient_dim
    d = dim(p)
    if d == 0:
        return True, ()
    if d == n:
        return _halfspaces_verdict(p)
    v0 = p.vertices[0]
    span = dd_convert(Polyhedron.from_vrep([zero(n)], (), _affine_span(p, v0), n))
    basis = span.lineality
    classes = _coordinate_classes(basis, n)
    if len(basis) != len(classes) - 1:
        return False, ()
    keep = _projection(classes)
    verts = [tuple(v[k] for k in keep) for v in p.vertices]
    rays = [tuple(r[k] for k in keep) for r in p.rays]
    lin = [tuple(l[k] for k in keep) for l in p.lineality]
    img = remove_redundancy(dd_convert(Polyhedron.from_vrep(verts, rays, lin, len(keep))))
    return _halfspaces_verdict(img)


def _affine_span(p: Polyhedron, v0) -> list[Vector]:
    return [sub(v, v0) for v in p.vertices if v != v0] + list(p.rays) + list(p.lineality)


def is_tconvex_polyhedron(p: Polyhedron) -> PolyhedronVerdict:
    """Tropical convexity of a polyhedron, with a witness when it fails.

    Full-dimensional polyhedra are tropically convex exactly when every
    facet halfspace is.  A lower-dimensional one must sit in a tropically
    convex linear space (after moving a vertex to the origin); deleting
    all but one coordinate from each class of equal coordinates then
    identifies that space with a coordinate space, where the image is
    full-dimensional and is classified the same way.
    """
    p = remove_redundancy(dd_convert(p))
    if p.is_empty:
        return PolyhedronVerdict(True)
    ok, failing = _decide(p)
    if ok:
        return PolyhedronVerdict(True)
    return PolyhedronVerdict(False, witness=find_witness(p), failing=failing)


# --------------------------------------------------------------------------
# witnesses


def _outside_pseudovertex(p: Polyhedron, x: Vector, y: Vector):
    for q in trop_segment(x, y):
        if not p.contains(q):
            return q
    return None


def find_witness(p: Polyhedron) -> tuple:
    """Two points of ``p`` whose tropical segment leaves ``p``.

    Pairs of vertices are tried first.  If none works, a point ``w`` of
    ``tconv p`` outside ``p`` is written as a tropical combination
    ``min_m (c_m + u_m)`` of points ``u_m`` of ``p``; folding the terms in
    one at a time in increasing order of ``c_m`` keeps every partial
    result inside ``tconv p``, and the first partial result that leaves
    ``p`` is a point of the tropical segment between the previous one
    (still in ``p``) and ``u_m``.  Some breakpoint of that segment is then
    outside ``p`` as well, because ``p`` is convex.
    """
    verts = p.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            q = _outside_pseudovertex(p, x, y)
            if q is not None:
                return (x, y, q)
    n = p.ambient_dim
    w = _point_outside(p)
    # u_j: a point of p with w - u_j in S_j
    us = []
    for j in range(n + 1):
        cone = Polyhedron.from_vrep([w], [tuple(-g for g in gen) for gen in sector_generators(j, n)])
        cell = intersect([p, cone])
        us.append(cell.vertices[0])
    W = homogenize(w)
    U = [homogenize(u) for u in us]
    coeffs = [max(W[k] - u[k] for k in range(n + 1)) for u in U]
    order = sorted(range(len(U)), key=lambda m: coeffs[m])
    base = coeffs[order[0]]
    z = us[order[0]]
    for m in order[1:]:
        shift = coeffs[m] - base
        nxt = tuple(min(a, b + shift) for a, b in zip(z, us[m]))
        if not p.contains(nxt):
            q = _outside_pseudovertex(p, z, us[m])
            return (z, us[m], q)
        z = nxt
    raise AssertionError("tropical hull of p does not leave p")  # pragma: no cover


def _point_outside(p: Polyhedron) -> Vector:
    """A point of ``tconv p`` not in ``p``; assumes ``p`` is not tropically convex."""
    from .hull import tconv_polyhedron

    t = tconv_polyhedron(p)
    for v in t.vertices:
        if not p.contains(v):
            return v
    # every vertex is in p, so some ray or lineality direction of t leaves
    # p through an inequality or an equation; walk far enough along it
    v0 = t.vertices[0]
    dirs = list(t.rays) + list(t.lineality) + [scale(-1, l) for l in t.lineality]
    for r in dirs:
        for h in p.ineqs:
            rate = dot(h.normal, r)
            if rate < 0:
                return add(v0, scale((h.slack(v0) + 1) / -rate, r))
        for e in p.eqs:
            if dot(e.normal, r) != 0:
                return add(v0, r)
    raise AssertionError("p is tropically convex")  # pragma: no cover
