"""Exact rational polyhedra in double description.

A :class:`Polyhedron` carries an H-representation (inequalities
``a.x >= c`` and equations ``a.x == c``), a V-representation (vertices,
rays and a lineality basis), or both.  The missing one is produced on
demand by the double description method run on the homogenized cone, in
pure integer arithmetic.

The empty polyhedron is an ordinary value: ``p.is_empty`` is true, its
V-representation has no vertices and its H-representation is the single
inequality ``0 >= 1``.

Example::

    >>> sq = Polyhedron.from_hrep([((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)])
    >>> sorted(sq.vertices)
    [(Fraction(0, 1), Fraction(0, 1)), (Fraction(0, 1), Fraction(1, 1)), (Fraction(1, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(1, 1))]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput
from .exact import (
    Vector,
    check_dims,
    dot,
    independent_subset,
    integer_primitive,
    rank,
    rational,
    row_echelon,
    sub,
    vector,
    zero,
)


@dataclass(frozen=True)
class Halfspace:
    """``{x : normal . x >= offset}``; also used for equations ``normal . x == offset``."""

    normal: Vector
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "normal", vector(self.normal))
        object.__setattr__(self, "offset", rational(self.offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def slack(self, x: Sequence) -> Fraction:
        return dot(self.normal, x) - self.offset

    def contains(self, x: Sequence) -> bool:
        return self.slack(x) >= 0

    def is_trivial(self) -> bool:
        return not any(self.normal)

    def __repr__(self):
        a = ", ".join(str(t) for t in self.normal)
        return f"Halfspace(({a}) >= {self.offset})"


HalfspaceIneq = Halfspace


def _as_halfspace(h) -> Halfspace:
    if isinstance(h, Halfspace):
        return h
    a, c = h
    return Halfspace(a, c)


# --------------------------------------------------------------------------
# double description on integer cones


def _idot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _primitive(v) -> tuple[int, ...]:
    g = gcd(*v)
    if g > 1:
        return tuple(a // g for a in v)
    return tuple(v)


def _comb(s, u, t, v) -> tuple[int, ...]:
    return tuple(s * a + t * b for a, b in zip(u, v))


def cone_generators(ineqs, eqs, d: int):
    """Generators of ``{y in Q^d : h.y >= 0 for h in ineqs, e.y == 0 for e in eqs}``.

    Inputs are integer vectors.  Returns ``(lineality, rays)``: a basis of
    the lineality space and the extreme rays modulo it, all as primitive
    integer tuples.  Adjacency of rays is decided combinatorially on
    zero sets, which is exact because the ray list stays minimal.
    """
    lin = [tuple(1 if i == k else 0 for i in range(d)) for k in range(d)]
    rays: list[tuple[int, ...]] = []
    done: list[tuple[int, ...]] = []
    rows = [(tuple(e), True) for e in eqs] + [(tuple(h), False) for h in ineqs]
    for h, is_eq in rows:
        if not any(h):
            continue
        pivot = next((k for k, l in enumerate(lin) if _idot(h, l)), None)
        if pivot is not None:
            l0 = lin.pop(pivot)
            s0 = _idot(h, l0)
            if s0 < 0:
                l0 = tuple(-a for a in l0)
                s0 = -s0
            lin = [_primitive(_comb(s0, l, -_idot(h, l), l0)) for l in lin]
            rays = [_primitive(_comb(s0, r, -_idot(h, r), l0)) for r in rays]
            if not is_eq:
                rays.append(_primitive(l0))
                done.append(h)
            continue

        vals = [_idot(h, r) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        new = [r for r, s in zip(rays, vals) if s == 0 or (s > 0 and not is_eq)]
        if pos and neg:
            masks = []
            for r in rays:
                m = 0
                for k, g in enumerate(done):
                    if _idot(g, r) == 0:
                        m |= 1 << k
                masks.append(m)
            for p in pos:
                for q in neg:
                    common = masks[p] & masks[q]
                    if any(
                        k != p and k != q and common & ~masks[k] == 0
                        for k in range(len(rays))
                    ):
                        continue
                    new.append(_primitive(_comb(vals[p], rays[q], -vals[q], rays[p])))
        rays = new
        if not is_eq:
            done.append(h)
    return lin, rays


# --------------------------------------------------------------------------
# conversions between the two representations


def _homogenize(h: Halfspace) -> tuple[int, ...]:
    return integer_primitive((-h.offset,) + h.normal)


def _project_off(vs, basis):
    """Orthogonal projection of each vector in ``vs`` onto the complement of span(basis)."""
    if not basis:
        return list(vs)
    k = len(basis)
    gram = [[dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    out = []
    for v in vs:
        rhs = [dot(b, v) for b in basis]
        coef = _solve(gram, rhs)
        w = list(v)
        for c, b in zip(coef, basis):
            for t in range(len(w)):
                w[t] -= c * b[t]
        out.append(tuple(w))
    return out


def _solve(a, b):
    n = len(a)
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _canonical_basis(vs) -> list[Vector]:
    rows = row_echelon(vs)
    return [vector(integer_primitive(r)) for r in rows]


def _h_to_v(n: int, ineqs, eqs):
    hom_ineqs = [(1,) + (0,) * n] + [_homogenize(h) for h in ineqs]
    hom_eqs = [_homogenize(e) for e in eqs]
    lin, rays = cone_generators(hom_ineqs, hom_eqs, n + 1)
    verts = [tuple(Fraction(a, r[0]) for a in r[1:]) for r in rays if r[0] > 0]
    if not verts:
        return (), (), ()
    rec = [vector(r[1:]) for r in rays if r[0] == 0]
    lineality = _canonical_basis([r[1:] for r in lin])
    return _tidy_vrep(verts, rec, lineality)


def _tidy_vrep(verts, rays, lineality):
    """Canonical V-rep: project off lineality, primitive rays, dedupe, sort."""
    verts = _project_off(verts, lineality)
    rays = _project_off(rays, lineality)
    rays = [vector(integer_primitive(r)) for r in rays if any(r)]
    return tuple(sorted(set(verts))), tuple(sorted(set(rays))), tuple(lineality)


def _v_to_h(n: int, verts, rays, lineality):
    if not verts:
        return (Halfspace(zero(n), 1),), ()
    gens = [integer_primitive((Fraction(1),) + tuple(v)) for v in verts]
    gens += [integer_primitive((Fraction(0),) + tuple(r)) for r in rays]
    lin_gens = [integer_primitive((Fraction(0),) + tuple(l)) for l in lineality]
    dlin, drays = cone_generators(gens, lin_gens, n + 1)
    ineqs = []
    for y in drays:
        h = Halfspace(y[1:], -y[0])
        if h.is_trivial():
            continue
        # the face at infinity shows up as a dual ray that no vertex attains
        if not any(h.slack(v) == 0 for v in verts):
            continue
        ineqs.append(h)
    eq_rows = _canonical_basis([y[1:] + (-y[0],) for y in dlin])
    eqs = [Halfspace(r[:-1], r[-1]) for r in eq_rows]
    return tuple(sorted(ineqs, key=_hkey)), tuple(eqs)


def _hkey(h: Halfspace):
    return (h.normal, h.offset)


# --------------------------------------------------------------------------


class Polyhedron:
    """A polyhedron in ``Q^n`` held in one or both representations.

    Instances are treated as immutable.  A representation that was not
    supplied is computed once on first access and cached; the computation
    is deterministic so concurrent first accesses store identical values.
    """

    __slots__ = ("ambient_dim", "_hrep", "_vrep")

    def __init__(self, ambient_dim: int, hrep=None, vrep=None):
        if hrep is None and vrep is None:
            raise EmptyInput("a polyhedron needs at least one representation")
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        self.ambient_dim = ambient_dim
        self._hrep = hrep
        self._vrep = vrep

    # constructors ---------------------------------------------------------

    @classmethod
    def from_hrep(cls, ineqs=(), eqs=(), ambient_dim: int | None = None) -> "Polyhedron":
        ineqs = tuple(_as_halfspace(h) for h in ineqs)
        eqs = tuple(_as_halfspace(h) for h in eqs)
        rows = ineqs + eqs
        if ambient_dim is None:
            if not rows:
                raise EmptyInput("cannot infer the ambient dimension from an empty H-rep")
            ambient_dim = rows[0].dim
        for h in rows:
            if h.dim != ambient_dim:
                raise DimensionMismatch(f"halfspace of dimension {h.dim} in R^{ambient_dim}")
        return cls(ambient_dim, hrep=(ineqs, eqs))

    @classmethod
    def from_vrep(cls, vertices=(), rays=(), lineality=(), ambient_dim: int | None = None) -> "Polyhedron":
        vertices = tuple(vector(v) for v in vertices)
        rays = tuple(vector(r) for r in rays)
        lineality = tuple(vector(l) for l in lineality)
        gens = vertices + rays + lineality
        if ambient_dim is None:
            if not gens:
                raise EmptyInput("cannot infer the ambient dimension from an empty V-rep")
            ambient_dim = len(gens[0])
        for g in gens:
            if len(g) != ambient_dim:
                raise DimensionMismatch(f"generator of length {len(g)} in R^{ambient_dim}")
        if not vertices:
            return cls.empty(ambient_dim)
        return cls(ambient_dim, vrep=(vertices, rays, lineality))

    @classmethod
    def point(cls, x) -> "Polyhedron":
        return cls.from_vrep([x])

    @classmethod
    def cone(cls, rays, lineality=()) -> "Polyhedron":
        rays = [vector(r) for r in rays]
        n = len(rays[0]) if rays else len(lineality[0])
        return cls.from_vrep([zero(n)], rays, lineality)

    @classmethod
    def empty(cls, n: int) -> "Polyhedron":
        return cls(n, hrep=((Halfspace(zero(n), 1),), ()), vrep=((), (), ()))

    @classmethod
    def whole_space(cls, n: int) -> "Polyhedron":
        basis = tuple(tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n))
        return cls(n, hrep=((), ()), vrep=((zero(n),), (), basis))

    # representations --------------------------------------------------------

    @property
    def has_hrep(self) -> bool:
        return self._hrep is not None

    @property
    def has_vrep(self) -> bool:
        return self._vrep is not None

    @property
    def hrep(self):
        if self._hrep is None:
            hrep = _v_to_h(self.ambient_dim, *self._vrep)
            # a user-supplied V-rep may be redundant; swap in the canonical one
            vrep = _h_to_v(self.ambient_dim, *hrep)
            if vrep[0]:
                self._vrep = vrep
            self._hrep = hrep
        return self._hrep

    @property
    def vrep(self):
        if self._vrep is None:
            self._vrep = _h_to_v(self.ambient_dim, *self._hrep)
        return self._vrep

    @property
    def ineqs(self) -> tuple[Halfspace, ...]:
        return self.hrep[0]

    @property
    def eqs(self) -> tuple[Halfspace, ...]:
        return self.hrep[1]

    @property
    def vertices(self) -> tuple[Vector, ...]:
        return self.vrep[0]

    @property
    def rays(self) -> tuple[Vector, ...]:
        return self.vrep[1]

    @property
    def lineality(self) -> tuple[Vector, ...]:
        return self.vrep[2]

    # queries ----------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality

    def is_cone(self) -> bool:
        """True when the polyhedron is a cone with apex at the origin."""
        if self.is_empty or not self.contains(zero(self.ambient_dim)):
            return False
        ineqs, eqs = self.hrep
        return all(
            all(dot(h.normal, v) >= 0 for h in ineqs) and all(dot(e.normal, v) == 0 for e in eqs)
            for v in self.vertices
        )

    def contains(self, x: Sequence) -> bool:
        x = vector(x)
        check_dims(x, zero(self.ambient_dim))
        ineqs, eqs = self.hrep
        return all(h.slack(x) >= 0 for h in ineqs) and all(e.slack(x) == 0 for e in eqs)

    def dim(self) -> int:
        return dim(self)

    def generators(self):
        """All V-rep vectors, used for sorting and hashing of cells."""
        return self.vrep

    def __repr__(self):
        if self._vrep is not None:
            v, r, l = self._vrep
            if not v:
                return f"Polyhedron(empty in R^{self.ambient_dim})"
            return f"Polyhedron(R^{self.ambient_dim}: {len(v)} vertices, {len(r)} rays, lineality {len(l)})"
        i, e = self._hrep
        return f"Polyhedron(R^{self.ambient_dim}: {len(i)} inequalities, {len(e)} equations)"


# --------------------------------------------------------------------------
# operations


def dd_convert(p: Polyhedron) -> Polyhedron:
    """Return ``p`` with both representations populated and an irredundant V-rep.

    A polyhedron built with both representations is trusted as given.
    """
    if p.has_vrep and p.has_hrep:
        return p
    if p.has_vrep:
        ineqs, eqs = _v_to_h(p.ambient_dim, *p.vrep)
        vrep = _h_to_v(p.ambient_dim, ineqs, eqs)
        if not vrep[0]:
            return Polyhedron.empty(p.ambient_dim)
        return Polyhedron(p.ambient_dim, hrep=(ineqs, eqs), vrep=vrep)
    vrep = p.vrep
    if not vrep[0]:
        return Polyhedron.empty(p.ambient_dim)
    return Polyhedron(p.ambient_dim, hrep=p.hrep, vrep=vrep)


def minkowski_sum(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(f"R^{p.ambient_dim} + R^{q.ambient_dim}")
    if p.is_empty or q.is_empty:
        return Polyhedron.empty(p.ambient_dim)
    verts = {tuple(a + b for a, b in zip(v, w)) for v in p.vertices for w in q.vertices}
    raw = Polyhedron.from_vrep(
        sorted(verts), p.rays + q.rays, p.lineality + q.lineality, p.ambient_dim
    )
    return dd_convert(raw)


def intersect(ps: Iterable[Polyhedron]) -> Polyhedron:
    ps = list(ps)
    if not ps:
        raise EmptyInput("intersect() needs at least one polyhedron")
    n = ps[0].ambient_dim
    for p in ps:
        if p.ambient_dim != n:
            raise DimensionMismatch(f"R^{p.ambient_dim} vs R^{n}")
    ineqs: list[Halfspace] = []
    eqs: list[Halfspace] = []
    for p in ps:
        i, e = p.hrep
        ineqs.extend(i)
        eqs.extend(e)
    return remove_redundancy(Polyhedron(n, hrep=(tuple(ineqs), tuple(eqs))))


def dim(p: Polyhedron) -> int:
    """Affine dimension; -1 for the empty polyhedron."""
    verts, rays, lin = p.vrep
    if not verts:
        return -1
    v0 = verts[0]
    return rank([sub(v, v0) for v in verts[1:]] + list(rays) + list(lin))


def remove_redundancy(p: Polyhedron) -> Polyhedron:
    """Irredundant H-rep, keeping a subset of the original rows.

    Inequalities that hold with equality on the whole polyhedron move to
    the equations; the remaining ones are kept exactly when they define a
    facet, one row per facet.  Equations are reduced to an independent set.
    """
    n = p.ambient_dim
    verts, rays, lin = p.vrep
    if not verts:
        return Polyhedron.empty(n)
    ineqs, eqs = p.hrep
    d = dim(p)

    def tight(h: Halfspace):
        tv = frozenset(i for i, v in enumerate(verts) if h.slack(v) == 0)
        tr = frozenset(i for i, r in enumerate(rays) if dot(h.normal, r) == 0)
        return tv, tr

    implicit: list[Halfspace] = []
    facets: dict = {}
    for h in ineqs:
        if h.is_trivial():
            continue
        tv, tr = tight(h)
        if len(tv) == len(verts) and len(tr) == len(rays):
            implicit.append(h)
            continue
        if not tv or (tv, tr) in facets:
            continue
        v0 = verts[min(tv)]
        face_dim = rank(
            [sub(verts[i], v0) for i in tv] + [rays[i] for i in tr] + list(lin)
        )
        if face_dim == d - 1:
            facets[(tv, tr)] = h

    all_eqs = [e for e in tuple(eqs) + tuple(implicit) if not e.is_trivial()]
    keep = independent_subset([e.normal + (e.offset,) for e in all_eqs])
    new_eqs = tuple(all_eqs[i] for i in keep)
    new_ineqs = tuple(facets.values())
    return Polyhedron(n, hrep=(new_ineqs, new_eqs), vrep=(verts, rays, lin))


def is_subset(p: Polyhedron, q: Polyhedron) -> bool:
    """Decide ``p <= q`` by testing p's generators against q's H-rep."""
    if p.ambient_dim != q.ambient_dim:
        raise DimensionMismatch(f"R^{p.ambient_dim} vs R^{q.ambient_dim}")
    verts, rays, lin = p.vrep
    if not verts:
        return True
    ineqs, eqs = q.hrep
    for h in ineqs:
        if any(h.slack(v) < 0 for v in verts):
            return False
        if any(dot(h.normal, r) < 0 for r in rays):
            return False
        if any(dot(h.normal, l) != 0 for l in lin):
            return False
    for e in eqs:
        if any(e.slack(v) != 0 for v in verts):
            return False
        if any(dot(e.normal, r) != 0 for r in rays + lin):
            return False
    return True


def poly_equal(p: Polyhedron, q: Polyhedron) -> bool:
    return is_subset(p, q) and is_subset(q, p)


def box(lower: Sequence, upper: Sequence) -> Polyhedron:
    """Axis-parallel box ``lower <= x <= upper``."""
    lower, upper = vector(lower), vector(upper)
    n = check_dims(lower, upper)
    ineqs = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        ineqs.append(Halfspace(e, lower[i]))
        e[i] = -1
        ineqs.append(Halfspace(e, -upper[i]))
    return Polyhedron.from_hrep(ineqs, ambient_dim=n)


def translate(p: Polyhedron, t: Sequence) -> Polyhedron:
    t = vector(t)
    check_dims(t, zero(p.ambient_dim))
    hrep = vrep = None
    if p.has_vrep:
        v, r, l = p.vrep
        vrep = (tuple(tuple(a + b for a, b in zip(x, t)) for x in v), r, l)
    if p.has_hrep:
        i, e = p.hrep
        hrep = (
            tuple(Halfspace(h.normal, h.offset + dot(h.normal, t)) for h in i),
            tuple(Halfspace(h.normal, h.offset + dot(h.normal, t)) for h in e),
        )
    return Polyhedron(p.ambient_dim, hrep=hrep, vrep=vrep)


def cell_key(p: Polyhedron):
    """Deterministic sort key for cells of a complex."""
    v, r, l = p.vrep
    return (len(v) == 0, -dim(p), v, r, l)
