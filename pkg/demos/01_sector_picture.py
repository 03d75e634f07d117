"""The sector picture of a planar quadrilateral, drawn as five SVG panels.

Usage: python demos/01_sector_picture.py [OUTDIR]   (default: demos/out)
"""

import sys
from pathlib import Path

from tropconv import Polyhedron, minkowski_sum, sector, tconv_polyhedron
from tropconv.polyhedra import intersect, is_subset, poly_equal
from tropconv.render import figure_panels

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "out"
out.mkdir(parents=True, exist_ok=True)

quad = Polyhedron.from_vrep([(0, 2), (1, 0), (3, 3), (1, 5)])

# Each Minkowski sum with a sector S_j contains the quadrilateral.
sums = [minkowski_sum(quad, sector(j, 2)) for j in range(3)]
for j, s in enumerate(sums):
    print(f"P + S{j}: vertices {[tuple(map(str, v)) for v in s.vertices]}, contains P: {is_subset(quad, s)}")

# Their intersection is the tropical hull, here a hexagon.
hull = tconv_polyhedron(quad)
print("tconv P vertices:", [tuple(map(str, v)) for v in hull.vertices])
print("equals the intersection of the three sums:", poly_equal(intersect(sums), hull))

for k, (name, svg) in enumerate(figure_panels(quad)):
    path = out / f"panel{k}_{name.replace(' ', '_').replace('+', '_plus_')}.svg"
    path.write_text(svg)
    print("wrote", path)
