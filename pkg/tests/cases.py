"""Fixed inputs shared by several test modules."""

# seven rays of a degree 3 fan curve in PT^6, one per column
M_F = [
    [1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 1],
]

# degree 2 fan in PT^2 whose rays all have one-dimensional hulls
FOUR_RAYS = [(0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1)]

QUAD = [(0, 2), (1, 0), (3, 3), (1, 5)]
HEXAGON = [(0, 0), (1, 0), (3, 2), (3, 3), (1, 5), (0, 2)]
TRIANGLE_3D = [(0, 0, 0), (1, 2, 3), (4, 1, 7)]
