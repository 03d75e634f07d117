"""Exact tropical convexity in the min-plus convention.

Points of ``R^n`` are identified with points ``(0, x)`` of the tropical
projective torus.  All arithmetic is exact over the rationals.
"""

from .classify import (
    HalfspaceVerdict,
    LinearSpaceVerdict,
    PolyhedronVerdict,
    classify_halfspace,
    halfspace_plus_sector,
    is_tconvex_linear_space,
    is_tconvex_polyhedron,
)
from .curves import (
    DegreeBoundReport,
    FanCurve,
    check_degree_bound,
    degree,
    dim_tconv_curve,
    minimal_generator,
    random_balanced_fan,
    tconv_curve,
)
from .errors import *  # noqa: F401,F403
from .hull import (
    PolyhedralComplex,
    conv_of_complex,
    dim_tconv_segment,
    segment_hull_simplex,
    tconv_complex,
    tconv_finite,
    tconv_polyhedron,
    tconv_ray,
)
from .linalg import TropDet, TropMatrix, dim_tconv_columns, is_trop_singular, trop_det, trop_rank
from .polyhedra import (
    Halfspace,
    HalfspaceIneq,
    Polyhedron,
    dd_convert,
    dim,
    intersect,
    minkowski_sum,
    poly_equal,
    remove_redundancy,
)
from .render import figure_panels, render_svg
from .tropical import (
    CovectorType,
    TropPoint,
    covector,
    in_tconv_finite,
    sector,
    trop_combine,
    trop_segment,
)

__version__ = "0.1.0"
