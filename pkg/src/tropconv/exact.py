"""Exact rational scalars and vectors.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator) and vectors are plain tuples of them.  Nothing in
the package touches floating point except the SVG renderer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vector = tuple  # tuple[Fraction, ...]


def rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction.

    Accepts ints, Fractions, strings such as ``"3/4"`` or ``"-2"``, and
    floats that hold an integer value.  Non-integral floats are refused
    because their binary expansion is almost never what the caller meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if x.is_integer():
            return Fraction(int(x))
        raise TypeError(f"refusing inexact float {x!r}; pass a string like '1/3'")
    return Fraction(x)


def vector(xs: Iterable) -> Vector:
    return tuple(rational(x) for x in xs)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def check_dims(*vs: Sequence) -> int:
    n = len(vs[0])
    for v in vs[1:]:
        if len(v) != n:
            raise DimensionMismatch(f"expected length {n}, got {len(v)}")
    return n


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(t, v: Vector) -> Vector:
    return tuple(t * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def integer_primitive(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)


def rank(rows: Iterable[Sequence]) -> int:
    return len(row_echelon(rows))


def row_echelon(rows: Iterable[Sequence]) -> list[Vector]:
    """Reduced row echelon form (nonzero rows only) by exact elimination."""
    mat = [list(vector(r)) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    out: list[list[Fraction]] = []
    pivots: list[int] = []
    for col in range(ncols):
        piv = next((r for r in mat if r[col] != 0), None)
        if piv is None:
            continue
        mat.remove(piv)
        inv = 1 / piv[col]
        piv = [a * inv for a in piv]
        for r in mat:
            if r[col]:
                f = r[col]
                for k in range(col, ncols):
                    r[k] -= f * piv[k]
        for r in out:
            if r[col]:
                f = r[col]
                for k in range(col, ncols):
                    r[k] -= f * piv[k]
        out.append(piv)
        pivots.append(col)
        mat = [r for r in mat if any(r)]
        if not mat:
            break
    return [tuple(r) for r in out]


def independent_subset(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily in order."""
    keep: list[int] = []
    basis: list[Sequence] = []
    current = 0
    for i, r in enumerate(rows):
        r_ = rank(basis + [r])
        if r_ > current:
            keep.append(i)
            basis.append(r)
            current = r_
    return keep


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def distinct_nonzero(v: Sequence) -> int:
    """Number of distinct nonzero values among the entries of ``v``."""
    return len({x for x in v if x != 0})
