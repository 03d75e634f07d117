"""In R^3 the two hull operations stop commuting.

For the triangle on (0,0,0), (1,2,3), (4,1,7), convexifying the tropical
hull gives a smaller polytope than tropically convexifying the triangle.
Both have seven vertices.
"""

from tropconv import Polyhedron, conv_of_complex, is_tconvex_polyhedron, tconv_finite, tconv_polyhedron
from tropconv.polyhedra import is_subset

V = [(0, 0, 0), (1, 2, 3), (4, 1, 7)]

cx = tconv_finite(V)
print(f"tropical hull of the three points: {len(cx)} maximal cells, dimension {cx.dim()}")

small = conv_of_complex(cx)
big = tconv_polyhedron(Polyhedron.from_vrep(V))
print("conv(tconv V):", len(small.vertices), "vertices")
print("tconv(conv V):", len(big.vertices), "vertices")
print("first inside second:", is_subset(small, big))
for v in big.vertices:
    if not small.contains(v):
        print("  vertex of tconv(conv V) outside conv(tconv V):", tuple(map(str, v)))

# the triangle itself is not tropically convex; here is a certificate
verdict = is_tconvex_polyhedron(Polyhedron.from_vrep(V))
x, y, q = verdict.witness
print("witness: x =", tuple(map(str, x)), " y =", tuple(map(str, y)), " breakpoint outside =", tuple(map(str, q)))
