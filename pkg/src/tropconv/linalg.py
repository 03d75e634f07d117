"""Tropical determinant, singularity and rank.

The determinant is a min-cost assignment problem.  Costs are scaled to
integers and solved with the Hungarian algorithm, so ties are detected
exactly; uniqueness of the optimum is checked by forbidding each edge of
the optimal assignment in turn and re-solving.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .errors import EmptyInput, NotSquare
from .exact import rational


@dataclass(frozen=True)
class TropMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(rational(x) for x in r) for r in self.entries)
        if not rows or not rows[0]:
            raise EmptyInput("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.entries) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "TropMatrix":
        return TropMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def as_matrix(m) -> TropMatrix:
    return m if isinstance(m, TropMatrix) else TropMatrix(tuple(tuple(r) for r in m))


@dataclass(frozen=True)
class TropDet:
    """``argmin[i]`` is the column matched to row ``i`` by an optimal permutation."""

    value: Fraction
    unique: bool
    argmin: tuple

    @property
    def singular(self) -> bool:
        return not self.unique


def _hungarian(cost: list[list[int]]) -> tuple[int, list[int]]:
    """Min-cost perfect matching on a square integer matrix (potentials method)."""
    n = len(cost)
    INF = float("inf")
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assign = [0] * n
    for j in range(1, n + 1):
        assign[p[j] - 1] = j - 1
    return sum(cost[i][assign[i]] for i in range(n)), assign


def trop_det(M) -> TropDet:
    """``min_sigma sum_i M[i, sigma(i)]`` with a uniqueness flag."""
    M = as_matrix(M)
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix")
    n = M.rows
    den = 1
    for r in M.entries:
        for x in r:
            den = lcm(den, x.denominator)
    cost = [[int(x * den) for x in r] for r in M.entries]
    best, assign = _hungarian(cost)
    unique = True
    if n > 1:
        lo = min(min(r) for r in cost)
        hi = max(max(r) for r in cost)
        big = (hi - lo) * n + 1 + hi
        for i in range(n):
            forbidden = [row[:] for row in cost]
            forbidden[i][assign[i]] = big
            alt, _ = _hungarian(forbidden)
            if alt == best:
                unique = False
                break
    return TropDet(Fraction(best, den), unique, tuple(assign))


def is_trop_singular(M) -> bool:
    return not trop_det(M).unique


def trop_rank(M, seed: int = 0) -> int:
    """Size of the largest tropically nonsingular square minor.

    Minors are tried from the largest size down; within a size they are
    visited in a seeded random order and the search stops at the first
    nonsingular one.
    """
    M = as_matrix(M)
    rng = random.Random(seed)
    for r in range(min(M.rows, M.cols), 0, -1):
        rows = list(combinations(range(M.rows), r))
        cols = list(combinations(range(M.cols), r))
        pairs = [(a, b) for a in rows for b in cols]
        rng.shuffle(pairs)
        for a, b in pairs:
            if trop_det(M.submatrix(a, b)).unique:
                return r
    return 0  # pragma: no cover - every 1x1 minor is nonsingular


def dim_tconv_columns(M, seed: int = 0) -> int:
    """Dimension of the tropical hull of the columns in ``R^rows / R 1``."""
    return trop_rank(M, seed) - 1
