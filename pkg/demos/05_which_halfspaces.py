"""Which halfspaces and polyhedra are tropically convex?

A halfspace a.x >= c is either tropically convex or its tropical hull is
everything, and only the signs and sum of a decide which.
"""

from tropconv import Polyhedron, classify_halfspace, is_tconvex_polyhedron
from tropconv.classify import halfspace_plus_sector, is_tconvex_linear_space

for a in [(-1, -2), (1, -1), (1, -3), (2, -1, -1), (2, -1, -2), (0, 1)]:
    v = classify_halfspace(a)
    sums = [halfspace_plus_sector(a, j) for j in range(len(a) + 1)]
    print(f"a = {a}: convex={v.convex}, case={v.case}, sector sums={sums}")

# A triangle that is tropically convex but not closed under coordinatewise max.
tri = Polyhedron.from_vrep([(0, 0), (3, 1), (1, 3)])
print("triangle (0,0),(3,1),(1,3) tropically convex:", is_tconvex_polyhedron(tri).convex)
print("contains max((3,1),(1,3)) = (3,3):", tri.contains((3, 3)))

# Linear spaces: x1 = x2 is fine, the line through (1,2,3) is not.
plane = Polyhedron.from_hrep([], [((1, -1, 0), 0)], ambient_dim=3)
line = Polyhedron.from_vrep([(0, 0, 0)], (), [(1, 2, 3)])
v = is_tconvex_linear_space(plane)
print("{x1 = x2}: convex", v.convex, "cut out by", [tuple(map(str, h.normal)) for h in v.hyperplanes])
v = is_tconvex_linear_space(line)
print("R(1,2,3): convex", v.convex, "witness", tuple(map(str, v.witness)))
