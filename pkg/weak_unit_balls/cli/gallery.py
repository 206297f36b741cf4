"""Materialize the example corpus with solver verdicts and drawings."""

import json
import logging
from pathlib import Path
from typing import Any

from weak_unit_balls.disks.construct import represent_degree2_contractible
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.disks.table import PLACEMENT_TABLE
from weak_unit_balls.graphs.formats import serialize_graph
from weak_unit_balls.graphs.generators import gen_cycle
from weak_unit_balls.graphs.generators import gen_random_series_parallel
from weak_unit_balls.graphs.generators import gen_sungraph
from weak_unit_balls.graphs.generators import gen_wheel_hard
from weak_unit_balls.graphs.models import EdgeLabel
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.hard_labelings import find_hard_labelings
from weak_unit_balls.intervals.models import IntervalRep
from weak_unit_balls.intervals.outerplanar import represent_triangle_free_outerplanar
from weak_unit_balls.intervals.solver import decide_interval

from .constants import GALLERY_SERIES_PARALLEL_VERTICES
from .constants import GALLERY_WHEEL_SIZES
from .girth4 import load_girth4_fixture
from .serializers import dumps
from .svg import render_svg

logger = logging.getLogger(__name__)

SAT = "sat"
UNSAT = "unsat"

# w at (2, 1) in canonical position, one demo per labeling listed in the table.
TABLE_DEMO_W = (2, 1)


class _Gallery:
    def __init__(self, directory: Path) -> None:
        self.directory = directory
        self.entries: list[dict[str, Any]] = []

    def write(self, name: str, text: str) -> str:
        (self.directory / name).write_text(text, encoding="utf-8")
        logger.debug("Wrote %s", name)
        return name

    def add(
        self,
        name: str,
        g: LabeledGraph,
        rep: IntervalRep | DiskRep | None = None,
    ) -> None:
        interval = decide_interval(g)
        artifacts = [self.write(f"{name}.txt", serialize_graph(g))]
        if rep is not None:
            kind = "disk" if isinstance(rep, DiskRep) else "interval"
            artifacts.append(self.write(f"{name}.{kind}.json", dumps(rep)))
            artifacts.append(self.write(f"{name}.{kind}.svg", render_svg(g, rep)))
        self.entries.append(
            {
                "name": name,
                "vertices": g.vertex_count,
                "edges": g.edge_count,
                "interval": SAT if interval is not None else UNSAT,
                "artifacts": artifacts,
            },
        )


def _table_demos() -> list[tuple[str, LabeledGraph, DiskRep]]:
    demos = []
    for (label_uv, label_vw), rows in sorted(PLACEMENT_TABLE.items()):
        g = LabeledGraph(3, ((0, 1, label_uv), (1, 2, label_vw)))
        rep = DiskRep({0: (0, 0), 1: rows[TABLE_DEMO_W], 2: TABLE_DEMO_W})
        demos.append((f"table_{label_uv.value}{label_vw.value}", g, rep))
    return demos


def build_gallery(directory: Path, seed: int = 0) -> dict[str, Any]:
    """Write every gallery instance with its verdict and witnesses into ``directory``.

    Args:
        directory (Path): Output directory, created if missing.
        seed (int): Seed of the random series-parallel instance.

    Returns:
        dict[str, Any]: The manifest, also written to manifest.json.
    """
    directory.mkdir(parents=True, exist_ok=True)
    gallery = _Gallery(directory)
    sungraph = gen_sungraph()
    gallery.add("sungraph", sungraph)
    (hard,) = find_hard_labelings(sungraph, first_only=True)
    gallery.add("sungraph_hard", hard, represent_degree2_contractible(hard))
    for n in GALLERY_WHEEL_SIZES:
        gallery.add(f"wheel_hard_{n}", gen_wheel_hard(n))
    gallery.add("girth4_counterexample", load_girth4_fixture())
    square = gen_cycle(4).with_labels(
        [EdgeLabel.NEAR, EdgeLabel.FAR, EdgeLabel.FAR, EdgeLabel.NEAR],
    )
    gallery.add("square", square, represent_triangle_free_outerplanar(square))
    for name, g, rep in _table_demos():
        gallery.add(name, g, rep)
    series_parallel = gen_random_series_parallel(GALLERY_SERIES_PARALLEL_VERTICES, seed)
    gallery.add(
        f"series_parallel_{seed}",
        series_parallel,
        represent_degree2_contractible(series_parallel),
    )
    manifest = {"seed": seed, "instances": gallery.entries}
    text = json.dumps(manifest, sort_keys=True, indent=2) + "\n"
    gallery.write("manifest.json", text)
    logger.info("Gallery of %d instances in %s", len(gallery.entries), directory)
    return manifest
