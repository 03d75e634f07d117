import random

import pytest
from hypothesis import given, strategies as st

from cases import FOUR_RAYS, M_F
from tropconv.curves import (
    FanCurve,
    check_degree_bound,
    degree,
    dim_tconv_curve,
    fan_coordinate_dimension,
    finite_subset_dimension,
    minimal_generator,
    random_balanced_fan,
    ray_dimension,
    sample_on_rays,
    tconv_curve,
)
from tropconv.errors import DimensionMismatch, LinealityDirection, NotBalanced
from tropconv.hull import dim_tconv_segment, tconv_ray
from tropconv.linalg import dim_tconv_columns
from tropconv.polyhedra import dim, poly_equal
from tropconv.tropical import dehomogenize

GAMMA_F = FanCurve.from_columns(M_F)
FOUR = FanCurve(2, tuple((v, 1) for v in FOUR_RAYS))


def test_minimal_generator_examples():
    assert minimal_generator((0, 0, -1)) == (1, 1, 0)
    assert minimal_generator((0, 2, 4)) == (0, 1, 2)
    assert minimal_generator((0, 1, 0)) == (0, 1, 0)
    with pytest.raises(LinealityDirection):
        minimal_generator((3, 3, 3))


def test_degree_examples():
    assert degree(GAMMA_F) == 3
    assert degree(FOUR) == 2
    with pytest.raises(NotBalanced) as err:
        degree(FanCurve(3, (((0, 1, 1, 1), 1),)))
    assert err.value.total == (0, 1, 1, 1)
    with pytest.raises(DimensionMismatch):
        FanCurve(2, (((0, 1), 1),))
    with pytest.raises(ValueError):
        FanCurve(2, (((0, 1, 0), 0),))


def test_not_balanced_blocks_hulls():
    c = FanCurve(2, (((0, 1, 0), 1),))
    with pytest.raises(NotBalanced):
        tconv_curve(c)
    with pytest.raises(NotBalanced):
        check_degree_bound(c)


def test_tconv_curve_examples():
    cx = tconv_curve(FOUR)
    assert cx.dim() == 2 and cx.is_fan()
    # a lone ray is not a balanced curve, so compare the chart cells directly
    assert poly_equal(tconv_ray(dehomogenize((0, 1, 2), 0)), tconv_ray((1, 2)))
    assert dim(tconv_ray((1, 2))) == 2
    assert tconv_ray((1, 1)).rays == ((1, 1),)


def test_dimension_examples():
    assert dim_tconv_curve(GAMMA_F) == 2
    assert dim_tconv_curve(FOUR) == 2
    assert dim_tconv_columns(M_F) == 2
    assert ray_dimension((0, 1, 1, 1)) == 1
    # a line through the origin: v and its opposite
    line = FanCurve(3, (((0, 1, 1, 1), 1), ((1, 0, 0, 0), 1)))
    assert dim_tconv_curve(line) == 1 and degree(line) == 1


def test_reports():
    r = check_degree_bound(GAMMA_F)
    assert (r.dim, r.deg, r.holds) == (2, 3, True)
    assert r.ray_max == max(dim_tconv_segment((0,) * 6, dehomogenize(v, 0)) for v in GAMMA_F.generators)
    assert r.ray_max == 1 and not r.prop_applicable
    r = check_degree_bound(FOUR)
    assert r.to_json() == {"dim": 2, "deg": 2, "holds": True, "ray_max": 1, "prop_applicable": False}


def test_scaled_point_probe_for_gamma_f():
    # points lambda * v_i on four rays never reach a 3-dimensional hull
    rng = random.Random(2)
    for _ in range(20):
        W = sample_on_rays(GAMMA_F, 4, rng)
        assert finite_subset_dimension(W) <= 2


def test_chart_invariance():
    for c in (GAMMA_F, FOUR):
        dims = {dim_tconv_curve(c, chart) for chart in (0, c.ambient)}
        assert dims == {2}


def corpus(seed=0, size=20):
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        n = rng.randint(1, 4)
        out.append(random_balanced_fan(rng, n, rng.randint(2, 6)))
    return out


def test_corpus_generator():
    for c in corpus():
        assert len(c.rays) <= 6 and c.ambient <= 4
        deg = degree(c)
        for v in c.generators:
            assert min(v) == 0 and max(v) <= 4
            assert max(v) <= deg
    with pytest.raises(ValueError):
        random_balanced_fan(random.Random(0), 2, 1)


def test_corpus_bounds_and_coordinate_agreement():
    rng = random.Random(9)
    for c in corpus(1, 15):
        cx = tconv_curve(c)
        assert cx.is_fan()
        assert cx.dim() == fan_coordinate_dimension(cx)
        r = check_degree_bound(c)
        assert r.holds and r.ray_max <= r.dim
        for _ in range(3):
            W = sample_on_rays(c, rng.randint(1, 5), rng)
            assert finite_subset_dimension(W) <= r.deg


@given(st.integers(0, 10_000))
def test_random_fans_are_balanced(seed):
    rng = random.Random(seed)
    c = random_balanced_fan(rng, rng.randint(1, 4), rng.randint(2, 6))
    s = c.weighted_sum()
    assert len(set(s)) == 1 and s[0] == degree(c)
