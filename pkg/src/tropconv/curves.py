"""Fan tropical curves in the tropical projective torus ``PT^n``.

A fan curve is a finite set of rays ``pos(v_i)`` through the origin with
positive integer multiplicities ``m_i``, balanced in the sense that
``sum m_i v_i`` is a multiple ``d * (1,...,1)``; ``d`` is the degree.
Generators are stored as minimal nonnegative integer representatives in
``Z^{n+1}``.  Hulls are computed in the affine chart that zeroes one
coordinate (coordinate 0 by default).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, EmptyInput, LinealityDirection, NotBalanced
from .exact import distinct_nonzero, vector
from .hull import PolyhedralComplex, tconv_complex
from .linalg import dim_tconv_columns
from .polyhedra import Polyhedron
from .tropical import dehomogenize


def minimal_generator(v: Sequence[int]) -> tuple[int, ...]:
    """Representative of ``v + R 1`` with minimum 0 and coprime integer entries."""
    v = [int(x) for x in v]
    if not v:
        raise EmptyInput("empty generator")
    lo = min(v)
    w = [x - lo for x in v]
    g = gcd(*w)
    if g == 0:
        raise LinealityDirection(f"{v} is a multiple of (1,...,1)")
    return tuple(x // g for x in w)


@dataclass(frozen=True)
class FanCurve:
    """Weighted rays of a fan curve in ``PT^n``.

    ``rays`` holds ``(generator, multiplicity)`` pairs with generators of
    length ``n + 1``.  Generators are normalized on construction; balancing
    is checked lazily by :func:`degree` so that unbalanced input can still
    be inspected.
    """

    ambient: int
    rays: tuple

    def __post_init__(self):
        if not self.rays:
            raise EmptyInput("a curve needs at least one ray")
        out = []
        for v, m in self.rays:
            if len(v) != self.ambient + 1:
                raise DimensionMismatch(f"generator of length {len(v)} in PT^{self.ambient}")
            if int(m) != m or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m}")
            out.append((minimal_generator(v), int(m)))
        object.__setattr__(self, "rays", tuple(out))

    @classmethod
    def from_columns(cls, M: Sequence[Sequence[int]], multiplicities=None) -> "FanCurve":
        cols = [tuple(r[j] for r in M) for j in range(len(M[0]))]
        ms = multiplicities or [1] * len(cols)
        return cls(len(M) - 1, tuple(zip(cols, ms)))

    @property
    def generators(self) -> list[tuple[int, ...]]:
        return [v for v, _ in self.rays]

    def weighted_sum(self) -> tuple[int, ...]:
        return tuple(sum(m * v[k] for v, m in self.rays) for k in range(self.ambient + 1))


def degree(c: FanCurve) -> int:
    s = c.weighted_sum()
    if len(set(s)) != 1:
        raise NotBalanced(s)
    return s[0]


def _chart_cells(c: FanCurve, index: int) -> list[Polyhedron]:
    return [Polyhedron.cone([dehomogenize(v, index)]) for v in c.generators]


def tconv_curve(c: FanCurve, chart: int = 0) -> PolyhedralComplex:
    """Tropical hull of the curve in the chart zeroing coordinate ``chart``."""
    degree(c)
    return tconv_complex(PolyhedralComplex(tuple(_chart_cells(c, chart)), c.ambient))


def fan_coordinate_dimension(cx: PolyhedralComplex) -> int:
    """Maximum number of distinct nonzero coordinates of a point of the complex.

    For a tropically convex fan this equals its dimension.  The count is
    taken at random relative-interior points of each cell, where it is
    generically maximal.
    """
    best = 0
    for cell in cx.cells:
        best = max(best, _generic_distinct(cell))
    return best


def _generic_distinct(cell: Polyhedron) -> int:
    # distinct nonzero coordinates is lower semicontinuous; a few weighted
    # interior points suffice because the maximum is attained on an open set
    rng = random.Random(0)
    gens = list(cell.rays)
    best = 0
    for _ in range(8):
        x = list(cell.vertices[0])
        for g in gens:
            w = Fraction(rng.randint(1, 97), rng.randint(1, 13))
            for t in range(len(x)):
                x[t] += w * g[t]
        for l in cell.lineality:
            w = Fraction(rng.randint(-97, 97), rng.randint(1, 13))
            for t in range(len(x)):
                x[t] += w * l[t]
        best = max(best, distinct_nonzero(x))
    return best


def dim_tconv_curve(c: FanCurve, chart: int = 0) -> int:
    """Dimension of the tropical hull, with the coordinate-count cross-check."""
    cx = tconv_curve(c, chart)
    d = cx.dim()
    k = fan_coordinate_dimension(cx)
    if d != k:
        raise AssertionError(f"polyhedral dimension {d} disagrees with coordinate count {k}")  # pragma: no cover
    return d


def ray_dimension(v: Sequence[int]) -> int:
    """Dimension of ``tconv pos(v)``: distinct nonzero entries of ``v`` in any chart.

    Entries of the homogeneous vector minus its value at one coordinate;
    the count is the same for every chart because it equals the number of
    distinct values minus one.
    """
    return len(set(v)) - 1


@dataclass(frozen=True)
class DegreeBoundReport:
    dim: int
    deg: int
    holds: bool
    ray_max: int
    prop_applicable: bool

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "deg": self.deg,
            "holds": self.holds,
            "ray_max": self.ray_max,
            "prop_applicable": self.prop_applicable,
        }


def check_degree_bound(c: FanCurve, chart: int = 0) -> DegreeBoundReport:
    """Compare ``dim tconv`` of the curve with its degree.

    ``ray_max`` is the largest hull dimension of a single ray and
    ``prop_applicable`` records whether the hull dimension equals it, which
    is the situation where the hull is no bigger than its largest ray.
    """
    deg = degree(c)
    d = dim_tconv_curve(c, chart)
    ray_max = max(ray_dimension(v) for v in c.generators)
    return DegreeBoundReport(d, deg, d <= deg, ray_max, d == ray_max)


def finite_subset_dimension(points: Sequence[Sequence], seed: int = 0) -> int:
    """``dim tconv W`` for points of ``R^{n+1}`` (taken modulo ``R 1``), via tropical rank."""
    cols = [vector(p) for p in points]
    M = [[c[i] for c in cols] for i in range(len(cols[0]))]
    return dim_tconv_columns(M, seed)


def sample_on_rays(c: FanCurve, count: int, rng: random.Random) -> list[tuple[Fraction, ...]]:
    """``count`` random points ``lambda * v_i`` on the rays of ``c`` (homogeneous)."""
    out = []
    gens = c.generators
    for _ in range(count):
        v = gens[rng.randrange(len(gens))]
        lam = Fraction(rng.randint(1, 20), rng.randint(1, 5))
        out.append(tuple(lam * x for x in v))
    return out


def random_balanced_fan(rng: random.Random, n: int, k: int, max_entry: int = 4) -> FanCurve:
    """A random balanced fan in ``PT^n`` with at most ``k`` rays and entries ``<= max_entry``.

    ``k - 1`` random minimal generators are drawn; the last ray closes the
    sum up to a multiple of ``(1,...,1)``, its multiplicity being the gcd
    of the closing vector.  Draws violating the entry bound are rejected.
    """
    if k < 2:
        raise ValueError("a balanced fan needs at least two rays")
    while True:
        rays = []
        for _ in range(k - 1):
            while True:
                v = [rng.randint(0, max_entry) for _ in range(n + 1)]
                v[rng.randrange(n + 1)] = 0
                if any(v):
                    break
            rays.append((minimal_generator(v), rng.randint(1, 2)))
        s = [sum(m * v[t] for v, m in rays) for t in range(n + 1)]
        top = max(s)
        last = [top - x for x in s]
        if not any(last):
            return FanCurve(n, tuple(rays))
        g = gcd(*last)
        gen = tuple(x // g for x in last)
        if max(gen) > max_entry:
            continue
        rays.append((gen, g))
        return FanCurve(n, tuple(rays))
