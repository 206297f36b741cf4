"""Default settings for the "graphs" app."""

# Upper bound on log2 of the raw search space of the exhaustive oracles.
DEFAULT_WORK_BOUND_BITS = 40

# find_hard_labelings enumerates 2^|E| labelings.
DEFAULT_HARD_LABELING_EDGE_BOUND = 20

# Exact decomposition search is exponential in |V|.
DEFAULT_EXACT_DECOMPOSITION_BOUND = 24

DEFAULT_GIRTH4_CANDIDATE_BOUND = 64

# Below this many vertices mad() enumerates vertex subsets directly.
MAD_BRUTE_FORCE_VERTEX_LIMIT = 10

NEAR_SYMBOL = "N"
FAR_SYMBOL = "F"
