"""management.py command solving, constructing, verifying and drawing representations.

Exit codes: 0 on success or SAT, 1 on UNSAT, invalid input or failed verification,
2 on usage errors.
"""

import argparse
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from weak_unit_balls.cli.constants import EXIT_FAILED
from weak_unit_balls.cli.constants import EXIT_USAGE
from weak_unit_balls.cli.gallery import build_gallery
from weak_unit_balls.cli.serializers import Document
from weak_unit_balls.cli.serializers import dumps
from weak_unit_balls.cli.serializers import loads
from weak_unit_balls.cli.serializers import to_payload
from weak_unit_balls.cli.svg import render_svg
from weak_unit_balls.cubes.export import cube_scene_to_obj
from weak_unit_balls.cubes.geometry import contact_graph
from weak_unit_balls.cubes.geometry import overlapping_pairs
from weak_unit_balls.cubes.lift import lift_cubes
from weak_unit_balls.cubes.lift import verify_cube_contacts
from weak_unit_balls.cubes.models import CubeScene
from weak_unit_balls.cubes.models import SquareContactRep
from weak_unit_balls.disks.construct import represent_degree2_contractible
from weak_unit_balls.disks.construct import verify_disk
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.disks.oracle import grid_disk_oracle
from weak_unit_balls.graphs.exceptions import InvalidGraphError
from weak_unit_balls.graphs.exceptions import NotOuterplanarError
from weak_unit_balls.graphs.exceptions import WeakRepError
from weak_unit_balls.graphs.exceptions import WorkBoundExceededError
from weak_unit_balls.graphs.formats import parse_graph
from weak_unit_balls.graphs.models import Edge
from weak_unit_balls.graphs.models import LabeledGraph
from weak_unit_balls.intervals.decompositions import color_forest_2independent
from weak_unit_balls.intervals.decompositions import decompose_forest_2independent
from weak_unit_balls.intervals.decompositions import represent_by_decomposition
from weak_unit_balls.intervals.decompositions import represent_girth5_outerplanar
from weak_unit_balls.intervals.decompositions import validate_decomposition
from weak_unit_balls.intervals.decompositions import validate_nearly_2independent
from weak_unit_balls.intervals.exceptions import GirthTooSmallError
from weak_unit_balls.intervals.models import Decomposition
from weak_unit_balls.intervals.models import IntervalRep
from weak_unit_balls.intervals.models import ThresholdColoring
from weak_unit_balls.intervals.oracle import grid_oracle_interval
from weak_unit_balls.intervals.outerplanar import represent_triangle_free_outerplanar
from weak_unit_balls.intervals.solver import decide_interval
from weak_unit_balls.intervals.solver import to_threshold_coloring
from weak_unit_balls.intervals.solver import verify_interval
from weak_unit_balls.intervals.solver import verify_threshold_coloring

logger = logging.getLogger(__name__)

FORMATS = ("json", "svg", "txt")
METHODS = ("auto", "outerplanar", "girth5", "decomposition")

# Constructions that do not apply to a graph raise one of these.
_NOT_APPLICABLE = (GirthTooSmallError, NotOuterplanarError, InvalidGraphError)


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        msg = f"expected a positive rational like 2 or 3/2, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from err
    if value <= 0:
        msg = f"expected a positive rational, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _pairs(edges: list[Edge] | tuple[Edge, ...]) -> list[list[int]]:
    return [list(edge) for edge in edges]


class Command(BaseCommand):
    """Management command for weak unit interval, disk and cube representations."""

    help = "Solve, construct, verify and draw weak unit ball representations"

    def add_arguments(self, parser: CommandParser) -> None:
        """Declare one subparser per subcommand.

        Args:
            parser (CommandParser): The command's parser.
        """
        subparsers = parser.add_subparsers(dest="subcommand", required=True)

        solve = subparsers.add_parser("solve", help="decide interval representability")
        self._add_graph(solve)
        self._add_output(solve)
        solve.add_argument("--diameter", type=_rational)
        solve.add_argument("--max-color", type=int, dest="max_color")

        interval = subparsers.add_parser(
            "construct-interval",
            help="build an interval representation",
        )
        self._add_graph(interval)
        self._add_output(interval)
        interval.add_argument("--method", choices=METHODS, default="auto")
        interval.add_argument("--diameter", type=_rational)

        disk = subparsers.add_parser(
            "construct-disk",
            help="build a disk representation",
        )
        self._add_graph(disk)
        self._add_output(disk)
        disk.add_argument("--grid-radius", type=int, dest="grid_radius")

        verify = subparsers.add_parser(
            "verify",
            help="check a document against a graph",
        )
        self._add_graph(verify)
        verify.add_argument("representation", type=Path)

        decompose = subparsers.add_parser(
            "decompose",
            help="find a (2-independent, forest) decomposition",
        )
        self._add_graph(decompose)
        self._add_output(decompose)
        decompose.add_argument("--greedy", action="store_true")

        gallery = subparsers.add_parser("gallery", help="write the example corpus")
        gallery.add_argument("directory", type=Path)
        gallery.add_argument("--seed", type=int, default=0)

        lift = subparsers.add_parser("lift-cubes", help="lift squares into cubes")
        lift.add_argument("squares", type=Path)
        lift.add_argument("coloring", type=Path)
        lift.add_argument("--graph", type=Path)
        self._add_output(lift)

        svg = subparsers.add_parser("export-svg", help="draw a representation")
        self._add_graph(svg)
        svg.add_argument("representation", type=Path)
        svg.add_argument("--output", type=Path)

    @staticmethod
    def _add_graph(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", type=Path, help="graph text file")

    @staticmethod
    def _add_output(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--format", choices=FORMATS, default="json", dest="fmt")
        parser.add_argument("--output", type=Path)

    def handle(self, *args: Any, **options: Any) -> None:
        """Run the chosen subcommand.

        Args:
            *args: Variable length argument list.
            **options: Parsed command line options.

        Raises:
            CommandError: With return code 1 on UNSAT, invalid input or failed
                verification, and 2 on usage errors.
        """
        subcommand = options["subcommand"]
        handler = getattr(self, "_" + subcommand.replace("-", "_"))
        try:
            handler(options)
        except (WeakRepError, ValueError) as err:
            raise CommandError(str(err), returncode=EXIT_FAILED) from err

    # Input and output.

    def _read(self, path: Path) -> str:
        try:
            return path.read_text(encoding="utf-8")
        except OSError as err:
            msg = f"Cannot read {path}: {err.strerror}"
            raise CommandError(msg, returncode=EXIT_USAGE) from err

    def _graph(self, options: dict[str, Any]) -> LabeledGraph:
        return parse_graph(self._read(options["graph"]))

    def _document(self, path: Path) -> Document:
        return loads(self._read(path))

    def _emit(self, text: str, output: Path | None) -> None:
        if output is None:
            self.stdout.write(text, ending="")
            return
        output.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", output)

    def _emit_rep(
        self,
        g: LabeledGraph,
        rep: IntervalRep | DiskRep,
        options: dict[str, Any],
        payload: dict[str, Any],
    ) -> None:
        fmt = options["fmt"]
        if fmt == "svg":
            text = render_svg(g, rep)
        elif fmt == "txt":
            if isinstance(rep, DiskRep):
                lines = [f"{v} {x} {y}" for v, (x, y) in rep.points.items()]
            else:
                lines = [f"{v} {x}" for v, x in rep.coords.items()]
            text = "\n".join(lines) + "\n"
        else:
            text = _json(payload)
        self._emit(text, options["output"])

    @staticmethod
    def _fail(message: str) -> CommandError:
        return CommandError(message, returncode=EXIT_FAILED)

    # Subcommands.

    def _solve(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        rep = decide_interval(g)
        payload: dict[str, Any] = {"result": "unsat" if rep is None else "sat"}
        if options["max_color"] is not None:
            witness = grid_oracle_interval(g, options["max_color"])
            payload["oracle"] = "unknown" if witness is None else "sat"
        if rep is None:
            self._emit(_json(payload), options["output"])
            msg = "No weak unit interval representation exists"
            raise self._fail(msg)
        coloring = to_threshold_coloring(rep, g)
        if options["diameter"] is not None:
            rep = rep.scaled(options["diameter"] / rep.diameter)
        payload["representation"] = to_payload(rep)
        payload["coloring"] = to_payload(coloring)
        self._emit_rep(g, rep, options, payload)

    def _construct_interval(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        method = options["method"]
        rep = self._interval_by(method, g)
        if rep is None:
            msg = f"Method {method!r} found no interval representation"
            raise self._fail(msg)
        if options["diameter"] is not None:
            rep = rep.scaled(options["diameter"] / rep.diameter)
        self._emit_rep(g, rep, options, to_payload(rep))

    @staticmethod
    def _interval_by(method: str, g: LabeledGraph) -> IntervalRep | None:
        if method == "outerplanar":
            return represent_triangle_free_outerplanar(g)
        if method == "girth5":
            return represent_girth5_outerplanar(g)
        if method == "decomposition":
            return represent_by_decomposition(g)
        for construction in (
            represent_triangle_free_outerplanar,
            represent_girth5_outerplanar,
        ):
            try:
                return construction(g)
            except _NOT_APPLICABLE as err:
                logger.debug("%s does not apply: %s", construction.__name__, err)
        try:
            rep = represent_by_decomposition(g)
        except WorkBoundExceededError as err:
            logger.debug("Skipping the decomposition search: %s", err)
            rep = None
        return rep or decide_interval(g)

    def _construct_disk(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        radius = options["grid_radius"]
        if radius is None:
            rep = represent_degree2_contractible(g)
        else:
            found = grid_disk_oracle(g, radius)
            if found is None:
                msg = f"No lattice placement within radius {radius}"
                raise self._fail(msg)
            rep = found
        self._emit_rep(g, rep, options, to_payload(rep))

    def _verify(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        document = self._document(options["representation"])
        violations = self._violations(g, document)
        result = {
            "result": "ok" if not violations else "violated",
            "violations": _pairs(violations),
        }
        self._emit(_json(result), None)
        if violations:
            msg = f"Verification failed on {len(violations)} pairs"
            raise self._fail(msg)

    @staticmethod
    def _violations(g: LabeledGraph, document: Document) -> list[Edge]:
        match document:
            case IntervalRep():
                return list(verify_interval(g, document).violations)
            case DiskRep():
                return list(verify_disk(g, document).violations)
            case ThresholdColoring():
                return list(verify_threshold_coloring(g, document).violations)
            case CubeScene():
                return list(verify_cube_contacts(g, document).violations)
            case SquareContactRep():
                missing = set(g.pairs()) - contact_graph(document)
                return sorted(missing | set(overlapping_pairs(document)))
            case Decomposition():
                # Raises InvalidDecompositionError, reported with exit code 1.
                if document.ipairs:
                    validate_nearly_2independent(g, document)
                else:
                    validate_decomposition(g, document)
                return []
        msg = f"Cannot verify a {type(document).__name__}"
        raise CommandError(msg, returncode=EXIT_USAGE)

    def _decompose(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        dec = decompose_forest_2independent(g, exact=not options["greedy"])
        if dec is None:
            self._emit(_json({"result": "none"}), options["output"])
            msg = "No (2-independent, forest) decomposition found"
            raise self._fail(msg)
        rep = color_forest_2independent(g, dec)
        payload = {
            "result": "found",
            "decomposition": to_payload(dec),
            "representation": to_payload(rep),
        }
        self._emit_rep(g, rep, options, payload)

    def _gallery(self, options: dict[str, Any]) -> None:
        manifest = build_gallery(options["directory"], options["seed"])
        self.stdout.write(
            self.style.SUCCESS(
                f"Wrote {len(manifest['instances'])} instances to "
                f"{options['directory']}",
            ),
        )

    def _lift_cubes(self, options: dict[str, Any]) -> None:
        squares = self._document(options["squares"])
        coloring = self._document(options["coloring"])
        if not isinstance(squares, SquareContactRep):
            msg = f"{options['squares']} does not hold squares"
            raise CommandError(msg, returncode=EXIT_USAGE)
        if not isinstance(coloring, ThresholdColoring):
            msg = f"{options['coloring']} does not hold a threshold coloring"
            raise CommandError(msg, returncode=EXIT_USAGE)
        if options["fmt"] == "svg":
            msg = "Cube scenes are exported as json or txt (OBJ)"
            raise CommandError(msg, returncode=EXIT_USAGE)
        g = None
        if options["graph"] is not None:
            g = parse_graph(self._read(options["graph"]))
        threshold = coloring.threshold
        scene = lift_cubes(squares, coloring, threshold, squares.side - threshold, g=g)
        text = cube_scene_to_obj(scene) if options["fmt"] == "txt" else dumps(scene)
        self._emit(text, options["output"])

    def _export_svg(self, options: dict[str, Any]) -> None:
        g = self._graph(options)
        document = self._document(options["representation"])
        if not isinstance(document, IntervalRep | DiskRep):
            msg = "Only interval and disk representations can be drawn"
            raise CommandError(msg, returncode=EXIT_USAGE)
        self._emit(render_svg(g, document), options["output"])
