"""Tropical segments and the simplex spanned by their breakpoints.

The ordinary convex hull of a tropical segment is a simplex whose
dimension counts the distinct nonzero coordinates of b - a.
"""

from tropconv import Polyhedron, conv_of_complex, dim, poly_equal, tconv_finite, tconv_polyhedron, trop_segment
from tropconv.hull import dim_tconv_segment, segment_hull_simplex


def show(a, b):
    print(f"a = {a}, b = {b}")
    print("  breakpoints:", [tuple(map(str, p)) for p in trop_segment(a, b)])
    simplex = segment_hull_simplex(a, b)
    for h in simplex.ineqs:
        print("  ", " + ".join(f"{c}*x{k + 1}" for k, c in enumerate(h.normal) if c), ">=", h.offset)
    for e in simplex.eqs:
        print("  ", " + ".join(f"{c}*x{k + 1}" for k, c in enumerate(e.normal) if c), "==", e.offset)
    print("  dimension:", dim(simplex), "(formula:", dim_tconv_segment(a, b), ")")

    # the same set, reached two other ways
    r1 = tconv_polyhedron(Polyhedron.from_vrep([a, b]))
    r2 = conv_of_complex(tconv_finite([a, b]))
    print("  three routes agree:", poly_equal(r1, simplex) and poly_equal(r2, simplex))


show((0, 0, 0), (1, 2, 3))
show((0, 0), (1, 3))
show((0, 0, 0), (1, 1, 2))   # a repeated difference drops the dimension
show((2, 0, 1), (0, 1, 1))   # mixed signs
