"""Tropical convex hulls of polyhedra, finite sets and polyhedral complexes.

Everything rests on the sector description of the tropical hull,

    tconv U = (U + S_0)  cap  (U + S_1)  cap ... cap  (U + S_n),

which for a single polyhedron is a single polyhedron and for a union of
cells ``P_1, ..., P_N`` distributes into the union over all index tuples
``(i_0, ..., i_n)`` of ``(P_{i_0} + S_0) cap ... cap (P_{i_n} + S_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput, ZeroVector
from .exact import Vector, check_dims, distinct_nonzero, sub, vector, zero
from .polyhedra import (
    Halfspace,
    Polyhedron,
    cell_key,
    dd_convert,
    intersect,
    is_subset,
    minkowski_sum,
    remove_redundancy,
)
from .tropical import sector, trop_segment


@dataclass(frozen=True)
class PolyhedralComplex:
    """A finite union of polyhedra of a common ambient dimension.

    Cells may overlap; unless produced with ``refine=True`` they are only
    guaranteed to be maximal (no cell contained in another).
    """

    cells: tuple
    ambient_dim: int

    def __post_init__(self):
        cells = tuple(self.cells)
        for c in cells:
            if c.ambient_dim != self.ambient_dim:
                raise DimensionMismatch(f"cell in R^{c.ambient_dim}, complex in R^{self.ambient_dim}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_points(cls, points: Sequence[Sequence]) -> "PolyhedralComplex":
        if not points:
            raise EmptyInput("no points")
        pts = [vector(p) for p in points]
        n = check_dims(*pts)
        return cls(tuple(Polyhedron.point(p) for p in pts), n)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    @property
    def is_empty(self) -> bool:
        return all(c.is_empty for c in self.cells)

    def dim(self) -> int:
        return max((c.dim() for c in self.cells), default=-1)

    def contains(self, x) -> bool:
        return any(c.contains(x) for c in self.cells)

    def is_fan(self) -> bool:
        return all(c.is_cone() for c in self.cells)

    def generators(self):
        """Union of vertices, rays and lineality vectors over all cells."""
        verts, rays, lin = [], [], []
        for c in self.cells:
            if c.is_empty:
                continue
            v, r, l = c.vrep
            verts.extend(v)
            rays.extend(r)
            lin.extend(l)
        return verts, rays, lin


# --------------------------------------------------------------------------


def tconv_polyhedron(p: Polyhedron) -> Polyhedron:
    """Tropical convex hull of a polyhedron, itself a polyhedron."""
    if p.is_empty:
        return p
    n = p.ambient_dim
    return intersect([minkowski_sum(p, sector(j, n)) for j in range(n + 1)])


def _meet(a: Polyhedron, b: Polyhedron) -> Polyhedron | None:
    if is_subset(a, b):
        return a
    if is_subset(b, a):
        return b
    n = a.ambient_dim
    raw = Polyhedron(n, hrep=(a.ineqs + b.ineqs, a.eqs + b.eqs))
    if raw.is_empty:
        return None
    return remove_redundancy(raw)


def _maximal(cells: Iterable[Polyhedron]) -> list[Polyhedron]:
    """Drop empty cells and cells contained in another; result sorted by cell_key."""
    cells = sorted((c for c in cells if not c.is_empty), key=cell_key)
    kept: list[Polyhedron] = []
    for c in cells:
        if any(is_subset(c, k) for k in kept):
            continue
        kept = [k for k in kept if not is_subset(k, c)]
        kept.append(c)
    return sorted(kept, key=cell_key)


def tconv_complex(c: PolyhedralComplex, refine: bool = False) -> PolyhedralComplex:
    """Tropical convex hull of a union of polyhedra.

    The ``N^{n+1}`` intersections are built one sector at a time.  After
    each sector only the maximal partial intersections are carried on:
    if ``A`` is contained in ``B`` then every later intersection of ``A``
    is contained in the matching one of ``B``, so dropping ``A`` does not
    change the union.  The resulting cell list is independent of the
    input order.
    """
    n = c.ambient_dim
    cells = [dd_convert(p) for p in c.cells if not p.is_empty]
    if not cells:
        return PolyhedralComplex((), n)
    frontier = _maximal(minkowski_sum(p, sector(0, n)) for p in cells)
    for j in range(1, n + 1):
        sums = _maximal(minkowski_sum(p, sector(j, n)) for p in cells)
        frontier = _maximal(
            m for a in frontier for b in sums if (m := _meet(a, b)) is not None
        )
    if refine:
        frontier = refine_cells(frontier)
    return PolyhedralComplex(tuple(frontier), n)


def tconv_finite(V: Sequence[Sequence]) -> PolyhedralComplex:
    """Tropical polytope ``tconv V`` as a union of ordinary polytopes."""
    return tconv_complex(PolyhedralComplex.from_points(V))


def conv_of_complex(c: PolyhedralComplex) -> Polyhedron:
    """Ordinary convex hull of the union of the cells."""
    verts, rays, lin = c.generators()
    if not verts:
        return Polyhedron.empty(c.ambient_dim)
    return dd_convert(Polyhedron.from_vrep(verts, rays, lin, c.ambient_dim))


# --------------------------------------------------------------------------
# segments and rays


def _segment_frame(a: Vector, b: Vector):
    """Group the homogeneous coordinates of ``(0, b - a)`` by value.

    Returns the sorted distinct values and, for each, the list of
    homogeneous indices (0 is the hidden coordinate) carrying it.
    """
    d = (Fraction(0),) + sub(b, a)
    values = sorted(set(d))
    groups = [[k for k in range(len(d)) if d[k] == w] for w in values]
    return values, groups


def segment_hull_simplex(a: Sequence, b: Sequence) -> Polyhedron:
    """``conv tconv(a, b)`` (equal to ``tconv conv(a, b)``) by explicit facets.

    The homogeneous differences ``(0, b - a)`` take ``r + 1`` distinct
    values ``w_0 < ... < w_r``.  Choosing one coordinate from each value
    class and measuring against the lowest class gives a chart in which
    the segment runs from 0 to the strictly increasing point
    ``beta = (w_1 - w_0, ..., w_r - w_0)``; there the hull is the simplex

        beta_1 - y_1 >= 0
        -(beta_{t+1} - beta_t) y_{t-1} + (beta_{t+1} - beta_{t-1}) y_t
            - (beta_t - beta_{t-1}) y_{t+1} >= 0          (1 <= t < r)
        y_r - y_{r-1} >= 0

    with ``y_0 = beta_0 = 0``.  Coordinates sharing a class are tied by
    equations.  For ``a == b`` the result is the point ``a``.
    """
    a, b = vector(a), vector(b)
    n = check_dims(a, b)
    values, groups = _segment_frame(a, b)
    r = len(values) - 1
    if r == 0:
        return dd_convert(Polyhedron.point(a))

    # homogeneous shifted coordinate k as an affine form (coeffs, const) in x
    def form(k: int):
        coeffs = [Fraction(0)] * n
        if k == 0:
            return coeffs, Fraction(0)
        coeffs[k - 1] = Fraction(1)
        return coeffs, -a[k - 1]

    base = groups[0][0]
    rep = [g[0] for g in groups]

    def y(t: int):
        if t == 0:
            return [Fraction(0)] * n, Fraction(0)
        ck, kk = form(rep[t])
        cb, kb = form(base)
        return [p - q for p, q in zip(ck, cb)], kk - kb

    beta = [w - values[0] for w in values]

    def combo(terms, const=Fraction(0)):
        coeffs = [Fraction(0)] * n
        total = const
        for lam, (cf, kf) in terms:
            for i in range(n):
                coeffs[i] += lam * cf[i]
            total += lam * kf
        # sum(coeffs . x) + total >= 0   <=>  coeffs . x >= -total
        return Halfspace(coeffs, -total)

    ineqs = [combo([(Fraction(-1), y(1))], beta[1])]
    for t in range(1, r):
        ineqs.append(
            combo(
                [
                    (-(beta[t + 1] - beta[t]), y(t - 1)),
                    (beta[t + 1] - beta[t - 1], y(t)),
                    (-(beta[t] - beta[t - 1]), y(t + 1)),
                ]
            )
        )
    ineqs.append(combo([(Fraction(-1), y(r - 1)), (Fraction(1), y(r))]))

    eqs = []
    for g in groups:
        for k in g[1:]:
            cf0, k0 = form(g[0])
            cf1, k1 = form(k)
            eqs.append(Halfspace([p - q for p, q in zip(cf1, cf0)], k0 - k1))
    return Polyhedron(n, hrep=(tuple(ineqs), tuple(eqs)))


def dim_tconv_segment(a: Sequence, b: Sequence) -> int:
    """Number of distinct nonzero coordinates of ``a - b``."""
    a, b = vector(a), vector(b)
    check_dims(a, b)
    return distinct_nonzero(sub(a, b))


def tconv_ray(v: Sequence, apex: Sequence | None = None) -> Polyhedron:
    """``tconv pos(v)``: the cone over the pseudovertices of ``tconv(0, v)``.

    With ``apex`` given, the translated ray ``apex + pos(v)``; min-plus
    combinations commute with translation so this is the same cone moved
    to ``apex``.
    """
    v = vector(v)
    if not any(v):
        raise ZeroVector("tconv_ray needs a nonzero direction")
    n = len(v)
    gens = trop_segment(zero(n), v)[1:]
    origin = zero(n) if apex is None else vector(apex)
    return Polyhedron.from_vrep([origin], gens)


# --------------------------------------------------------------------------
# refinement


def refine_cells(cells: Sequence[Polyhedron]) -> list[Polyhedron]:
    """Split overlapping cells along each other's hyperplanes.

    Every cell is cut by the facet and equation hyperplanes of all other
    cells; pieces that coincide are merged and pieces contained in a
    larger piece are dropped.  Full-dimensional pieces then meet in common
    faces.
    """
    if not cells:
        return []
    n = cells[0].ambient_dim
    hyper = []
    seen = set()
    for c in cells:
        c = remove_redundancy(c)
        for h in c.ineqs + c.eqs:
            key = (h.normal, h.offset)
            neg = (tuple(-x for x in h.normal), -h.offset)
            if key in seen or neg in seen:
                continue
            seen.add(key)
            hyper.append(h)
    pieces: list[Polyhedron] = []
    for c in cells:
        current = [c]
        for h in hyper:
            flip = Halfspace(tuple(-x for x in h.normal), -h.offset)
            current = [q for piece in current for q in _split(piece, h, flip)]
        pieces.extend(current)
    return _maximal(pieces)


def _split(piece: Polyhedron, h: Halfspace, flip: Halfspace) -> list[Polyhedron]:
    n = piece.ambient_dim
    if is_subset(piece, Polyhedron(n, hrep=((h,), ()))) or is_subset(
        piece, Polyhedron(n, hrep=((flip,), ()))
    ):
        return [piece]
    out = []
    for side in (h, flip):
        q = intersect([piece, Polyhedron(n, hrep=((side,), ()))])
        if not q.is_empty:
            out.append(q)
    return out
