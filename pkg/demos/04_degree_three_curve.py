"""A degree 3 fan curve in PT^6 whose tropical hull is only a surface.

Its seven rays are the columns of a 0/1 matrix with three ones per row.
Tropical rank gives one bound, an exact hull computation the other.
"""

import random

from tropconv import FanCurve, check_degree_bound, trop_rank
from tropconv.curves import finite_subset_dimension, sample_on_rays

M = [
    [1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 1],
]
curve = FanCurve.from_columns(M)

print("tropical rank of the ray matrix:", trop_rank(M))
report = check_degree_bound(curve)
print("report:", report.to_json())

# Points on the rays, scaled at random, never span more than a surface.
rng = random.Random(0)
dims = [finite_subset_dimension(sample_on_rays(curve, 5, rng)) for _ in range(30)]
print("hull dimensions of 30 random five-point samples:", sorted(set(dims)))
