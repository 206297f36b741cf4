"""Constants shared by the interval constructions."""

# Diameter of the decomposition coloring over a 2-independent set and a forest.
FOREST_DIAMETER = 1

# Diameter of the coloring over a nearly 2-independent set.
NEARLY_INDEPENDENT_DIAMETER = 3

# Diameter and largest edge gap used when peeling triangle-free outerplanar graphs.
PATH_DIAMETER = 2
PATH_MAX_GAP = 6

# Stretching map from the forest coloring to the nearly 2-independent coloring.
STRETCHED_MAGNITUDE = {0: 0, 1: 2, 2: 5}
