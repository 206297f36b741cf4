"""Constants for weak unit disk representations."""

# Disk diameter used by every construction; points are integer lattice points.
DISK_DIAMETER = 2

# Square of the largest edge length any construction produces (edge gap <= 4).
MAX_EDGE_GAP_SQUARED = 16

# Offsets of a reinserted degree-1 vertex from its neighbor, by edge label.
PENDANT_OFFSET_NEAR = (2, 0)
PENDANT_OFFSET_FAR = (0, 3)

DEFAULT_GRID_RADIUS = 4
