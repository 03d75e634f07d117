"""Min-plus arithmetic, sectors, covector types and tropical segments.

Conventions: ``a (+) b = min(a, b)`` and ``a (.) b = a + b``.  Points of
``R^n`` are identified with points ``(0, x)`` of the tropical projective
torus ``R^{n+1} / R(1,...,1)``; coordinate 0 is that hidden leading zero.
The max-plus picture is obtained through ``x -> -x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import CoefficientNormalization, DimensionMismatch, EmptyInput, IndexOutOfRange
from .exact import Vector, check_dims, sub, unit, vector, zero
from .polyhedra import Halfspace, Polyhedron


def trop_combine(coeffs: Sequence, points: Sequence[Sequence], projective: bool = False) -> Vector:
    """Tropical linear combination ``min_i (coeffs[i] + points[i])``.

    In the default affine mode the coefficients must have minimum 0, as
    for tropical convex combinations in ``R^n``.  With ``projective=True``
    any coefficients are allowed.
    """
    if not points or not coeffs:
        raise EmptyInput("need at least one point")
    if len(coeffs) != len(points):
        raise DimensionMismatch(f"{len(coeffs)} coefficients for {len(points)} points")
    coeffs = vector(coeffs)
    points = [vector(p) for p in points]
    check_dims(*points)
    if not projective and min(coeffs) != 0:
        raise CoefficientNormalization(f"min of coefficients is {min(coeffs)}, expected 0")
    return tuple(min(c + p[k] for c, p in zip(coeffs, points)) for k in range(len(points[0])))


@dataclass(frozen=True)
class TropPoint:
    """A point of the tropical projective torus ``PT^n``.

    ``coords`` is the representative as given; two points are equal when
    their representatives differ by a multiple of ``(1, ..., 1)``.
    """

    coords: Vector

    def __post_init__(self):
        c = vector(self.coords)
        if not c:
            raise EmptyInput("a point of PT^n needs at least one coordinate")
        object.__setattr__(self, "coords", c)

    @property
    def normalized(self) -> Vector:
        c0 = self.coords[0]
        return tuple(x - c0 for x in self.coords)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def chart(self, index: int = 0) -> Vector:
        """Affine coordinates in ``R^n`` after setting coordinate ``index`` to zero."""
        ci = self.coords[index]
        return tuple(x - ci for k, x in enumerate(self.coords) if k != index)

    def __eq__(self, other):
        if not isinstance(other, TropPoint):
            return NotImplemented
        return self.normalized == other.normalized

    def __hash__(self):
        return hash(self.normalized)


def sector_generators(j: int, n: int) -> list[Vector]:
    """Ray generators of the sector ``S_j`` in ``R^n``."""
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"sector index {j} outside 0..{n}")
    neg = [tuple(-x for x in unit(n, i)) for i in range(n)]
    if j == 0:
        return neg
    ones = (Fraction(1),) * n
    return [ones] + [g for i, g in enumerate(neg) if i != j - 1]


@lru_cache(maxsize=None)
def sector(j: int, n: int) -> Polyhedron:
    """The sector ``S_j`` with both representations.

    ``S_0 = {x <= 0}`` and, for ``j >= 1``, ``S_j = {x_j >= 0, x_j >= x_i}``
    (1-based coordinates as in the usual notation; in code ``x_j`` is
    ``x[j - 1]``).
    """
    gens = sector_generators(j, n)
    if j == 0:
        ineqs = [Halfspace(g, 0) for g in gens]
    else:
        ineqs = [Halfspace(unit(n, j - 1), 0)]
        for i in range(n):
            if i != j - 1:
                a = [0] * n
                a[j - 1] = 1
                a[i] = -1
                ineqs.append(Halfspace(a, 0))
    return Polyhedron(n, hrep=(tuple(ineqs), ()), vrep=((zero(n),), tuple(gens), ()))


def in_sector(y: Sequence, j: int) -> bool:
    """``y in S_j``, decided on the H-representation."""
    return sector(j, len(y)).contains(y)


@dataclass(frozen=True)
class CovectorType:
    """Type of a point relative to ``V = (v_0, ..., v_{k-1})``.

    ``entries[j]`` is the set of indices ``i`` with ``x in v_i + S_j``; there
    are ``n + 1`` entries, one per sector.
    """

    entries: tuple

    def __getitem__(self, j: int) -> frozenset:
        return self.entries[j]

    def __len__(self):
        return len(self.entries)

    def covers(self) -> bool:
        return all(self.entries)

    def as_lists(self) -> list[list[int]]:
        return [sorted(t) for t in self.entries]


def covector(x: Sequence, V: Sequence[Sequence]) -> CovectorType:
    if not V:
        raise EmptyInput("reference set is empty")
    x = vector(x)
    V = [vector(v) for v in V]
    n = check_dims(x, *V)
    entries = []
    for j in range(n + 1):
        entries.append(frozenset(i for i, v in enumerate(V) if in_sector(sub(x, v), j)))
    return CovectorType(tuple(entries))


def in_tconv_finite(x: Sequence, V: Sequence[Sequence]) -> bool:
    """Tropical Farkas test: ``x`` lies in ``tconv V`` iff every type entry is nonempty."""
    return covector(x, V).covers()


def trop_segment(a: Sequence, b: Sequence) -> list[Vector]:
    """Pseudovertices of the tropical segment from ``a`` to ``b``, in order.

    With ``d = b - a`` sorted increasingly, the breakpoint for a negative
    difference ``d_j`` keeps ``a`` from coordinate ``j`` on and shifts the
    earlier coordinates of ``b``; for a positive ``d_j`` it copies ``b`` up
    to ``j`` and shifts the rest of ``a``.  Between the two families sits
    ``min(a, b)``, the breakpoint of the hidden coordinate 0.  Repeated
    points coming from tied differences are collapsed.
    """
    a, b = vector(a), vector(b)
    n = check_dims(a, b)
    d = sub(b, a)
    order = sorted(range(n), key=lambda k: d[k])
    pts: list[Vector] = []

    def emit(p):
        if not pts or pts[-1] != p:
            pts.append(p)

    negative = [j for j in order if d[j] < 0]
    positive = [j for j in order if d[j] > 0]
    for j in negative:
        emit(tuple(b[k] - d[j] if d[k] < d[j] else a[k] for k in range(n)))
    emit(tuple(min(x, y) for x, y in zip(a, b)))
    for j in positive:
        emit(tuple(b[k] if d[k] <= d[j] else a[k] + d[j] for k in range(n)))
    return pts


def homogenize(x: Sequence) -> Vector:
    """``x in R^n`` as the representative ``(0, x)`` in ``R^{n+1}``."""
    return (Fraction(0),) + vector(x)


def dehomogenize(x: Sequence, index: int = 0) -> Vector:
    """Chart of ``PT^n`` that sets coordinate ``index`` to zero and drops it."""
    x = vector(x)
    xi = x[index]
    return tuple(c - xi for k, c in enumerate(x) if k != index)


def trop_point(x) -> TropPoint:
    return x if isinstance(x, TropPoint) else TropPoint(vector(x))
