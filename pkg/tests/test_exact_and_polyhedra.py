from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals, vectors
from oracles import lp_is_redundant
from tropconv.errors import DimensionMismatch, EmptyInput
from tropconv.exact import format_rational, rational, row_echelon
from tropconv.polyhedra import (
    Halfspace,
    Polyhedron,
    box,
    dd_convert,
    dim,
    intersect,
    is_subset,
    minkowski_sum,
    poly_equal,
    remove_redundancy,
    translate,
)
from tropconv.tropical import sector


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def unit_square():
    return Polyhedron.from_hrep([((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)])


# exact scalars ---------------------------------------------------------------


def test_rational_coercion():
    assert rational("3/6") == Fraction(1, 2)
    assert rational(4.0) == 4
    with pytest.raises(TypeError):
        rational(0.1)
    with pytest.raises(TypeError):
        rational(True)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(5)) == "5"


def test_row_echelon_is_reduced():
    rows = row_echelon([(2, 4, 6), (1, 2, 3), (0, 1, 1)])
    assert rows == [F(1, 0, 1), F(0, 1, 1)]


# conversions -------------------------------------------------------------------


def test_unit_square_vertices():
    sq = dd_convert(unit_square())
    assert set(sq.vertices) == {F(0, 0), F(1, 0), F(0, 1), F(1, 1)}
    assert sq.rays == () and sq.lineality == ()


def test_sector_zero_hrep():
    p = Polyhedron.from_vrep([(0, 0)], [(-1, 0), (0, -1)])
    assert set(p.ineqs) == {Halfspace((-1, 0), 0), Halfspace((0, -1), 0)}
    assert p.eqs == ()


def test_triangle_has_three_facets():
    p = Polyhedron.from_vrep([(0, 0), (3, 1), (1, 3), (1, 1)])
    assert len(p.ineqs) == 3
    assert set(dd_convert(p).vertices) == {F(0, 0), F(3, 1), F(1, 3)}


def test_point_hrep_is_equations():
    p = Polyhedron.point((1, 2))
    assert p.ineqs == () and len(p.eqs) == 2
    assert p.contains((1, 2)) and not p.contains((1, 3))


def test_lineality_and_rays():
    p = Polyhedron.from_hrep([((0, 1), 0)])  # upper half plane
    assert len(p.lineality) == 1 and p.rays == (F(0, 1),)
    assert dim(p) == 2 and not p.is_bounded()


def test_empty_is_a_value():
    p = Polyhedron.from_hrep([((1,), 1), ((-1,), 0)])
    assert p.is_empty and dim(p) == -1
    assert intersect([Polyhedron.point((0, 0)), Polyhedron.point((1, 0))]).is_empty


def test_empty_input_errors():
    with pytest.raises(EmptyInput):
        Polyhedron.from_hrep([])
    with pytest.raises(DimensionMismatch):
        minkowski_sum(Polyhedron.point((0,)), Polyhedron.point((0, 0)))
    with pytest.raises(DimensionMismatch):
        Polyhedron.from_vrep([(0, 0), (1,)])


# operations ------------------------------------------------------------------


def test_minkowski_with_sector():
    seg = Polyhedron.from_vrep([(0, 0), (1, 2)])
    s = minkowski_sum(seg, sector(0, 2))
    # (0,0) is a generator of the sum but not a vertex: it lies below (1,2)
    assert s.vertices == (F(1, 2),)
    assert set(s.rays) == {F(-1, 0), F(0, -1)}
    assert s.contains((0, 0))


def test_intersect_halfspaces_gives_hyperplane():
    p = intersect([Polyhedron.from_hrep([((1,), 0)]), Polyhedron.from_hrep([((-1,), 0)])])
    assert p.ineqs == () and len(p.eqs) == 1
    assert dim(p) == 0


def test_dims():
    assert dim(Polyhedron.point((1, 2, 3))) == 0
    assert dim(Polyhedron.from_vrep([(0, 0, 0), (1, 1, 1)])) == 1


def test_remove_redundancy_examples():
    p = remove_redundancy(Polyhedron.from_hrep([((1, 0), 0), ((1, 0), -1), ((0, 1), 0)]))
    assert set(p.ineqs) == {Halfspace((1, 0), 0), Halfspace((0, 1), 0)}
    q = remove_redundancy(Polyhedron.from_hrep([((1, 0), 0), ((-1, 0), 0), ((0, 1), 0)]))
    assert q.ineqs == (Halfspace((0, 1), 0),)
    assert len(q.eqs) == 1 and q.eqs[0].offset == 0 and q.eqs[0].normal[1] == 0


def test_segment_simplex_hrep_is_irredundant_by_lp():
    rows = [((-1, 0, 0), -1), ((2, -1, 0), 0), ((-1, 2, -1), 0), ((0, -1, 1), 0)]
    for i in range(4):
        assert not lp_is_redundant(rows, i)
    p = remove_redundancy(Polyhedron.from_hrep(rows))
    assert len(p.ineqs) == 4


def test_poly_equal_basics():
    sq = unit_square()
    assert poly_equal(sq, dd_convert(sq))
    assert not poly_equal(sq, translate(sq, (1, 0)))
    assert poly_equal(box((0, 0), (1, 1)), sq)


def test_concurrent_reads_agree():
    from concurrent.futures import ThreadPoolExecutor

    p = Polyhedron.from_vrep([(0, 0, 0), (1, 2, 3), (4, 1, 7), (2, 2, 2)])
    with ThreadPoolExecutor(4) as ex:
        reps = list(ex.map(lambda _: p.hrep, range(8)))
    assert all(r == reps[0] for r in reps)


# properties ------------------------------------------------------------------


@st.composite
def hreps(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 4))
    k = draw(st.integers(1, 8))
    rows = [
        (draw(vectors(n, lo=-3, hi=3, max_den=2)), draw(rationals(-4, 4, 2))) for _ in range(k)
    ]
    rows = [(a, c) for a, c in rows if any(a)]
    assume(rows)
    return Polyhedron.from_hrep(rows)


@given(hreps())
def test_round_trip(p):
    q = dd_convert(dd_convert(p))
    assert poly_equal(p, q)
    twice = Polyhedron.from_vrep(*q.vrep, ambient_dim=q.ambient_dim) if not q.is_empty else q
    assert poly_equal(twice, p)


@given(hreps())
def test_vertices_satisfy_inequalities(p):
    q = dd_convert(p)
    for v in q.vertices:
        assert all(h.slack(v) >= 0 for h in q.ineqs)
        assert all(e.slack(v) == 0 for e in q.eqs)
    for r in q.rays:
        assert all(sum(a * b for a, b in zip(h.normal, r)) >= 0 for h in q.ineqs)


@given(hreps(), st.data())
def test_minkowski_identity_and_commutativity(p, data):
    assume(not p.is_empty)
    n = p.ambient_dim
    assert poly_equal(minkowski_sum(p, Polyhedron.point((0,) * n)), p)
    pts = data.draw(st.lists(vectors(n), min_size=1, max_size=3))
    q = Polyhedron.from_vrep(pts)
    assert poly_equal(minkowski_sum(p, q), minkowski_sum(q, p))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(hreps(n), hreps(n))), st.data())
def test_intersection_membership(ps, data):
    n = ps[0].ambient_dim
    inter = intersect(ps)
    for _ in range(5):
        x = data.draw(vectors(n, lo=-5, hi=5, max_den=2))
        assert inter.contains(x) == all(p.contains(x) for p in ps)


@given(hreps())
def test_remove_redundancy_idempotent(p):
    assume(not p.is_empty)
    q = remove_redundancy(p)
    assert poly_equal(p, q)
    r = remove_redundancy(Polyhedron.from_hrep(q.ineqs, q.eqs, ambient_dim=q.ambient_dim))
    assert set(r.ineqs) == set(q.ineqs) and len(r.eqs) == len(q.eqs)


@given(hreps())
def test_remove_redundancy_agrees_with_lp(p):
    assume(not p.is_empty and dim(p) == p.ambient_dim)
    q = remove_redundancy(p)
    rows = [(h.normal, h.offset) for h in q.ineqs]
    for i in range(len(rows)):
        assert not lp_is_redundant(rows, i)


@given(hreps())
def test_subset_reflexive_and_vertex(p):
    assume(not p.is_empty)
    assert is_subset(p, p)
    assert is_subset(Polyhedron.point(p.vertices[0]), p)
