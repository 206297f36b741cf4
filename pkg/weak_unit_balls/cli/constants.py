"""Constants for file formats, drawings and the command line."""

from pathlib import Path

# Payload kinds written to the "kind" field of every JSON document.
KIND_INTERVAL = "interval"
KIND_COLORING = "coloring"
KIND_DISK = "disk"
KIND_DECOMPOSITION = "decomposition"
KIND_SQUARES = "squares"
KIND_CUBES = "cubes"

# Pixels per unit of representation space in SVG drawings.
SVG_SCALE = 40
SVG_MARGIN = 20
SVG_ROW_SPACING = 1
NEAR_STROKE_WIDTH = 3
FAR_STROKE_WIDTH = 1
FAR_DASH = "6,4"

# Exit codes of the weakrep command.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"
GIRTH4_FIXTURE = FIXTURES_DIR / "girth4_counterexample.txt"

GALLERY_WHEEL_SIZES = range(4, 12)
GALLERY_SERIES_PARALLEL_VERTICES = 10
