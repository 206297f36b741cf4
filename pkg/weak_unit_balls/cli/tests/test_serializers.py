"""Tests for the JSON documents of the "cli" app."""

# pylint: disable=no-self-use, magic-value-comparison

import json
from fractions import Fraction

import pytest

from weak_unit_balls.cli.exceptions import PayloadError
from weak_unit_balls.cli.serializers import dumps
from weak_unit_balls.cli.serializers import format_rational
from weak_unit_balls.cli.serializers import from_payload
from weak_unit_balls.cli.serializers import loads
from weak_unit_balls.cli.serializers import to_payload
from weak_unit_balls.cubes.models import CubeScene
from weak_unit_balls.cubes.models import SquareContactRep
from weak_unit_balls.disks.models import DiskRep
from weak_unit_balls.intervals.models import Decomposition
from weak_unit_balls.intervals.models import IntervalRep
from weak_unit_balls.intervals.models import IPair
from weak_unit_balls.intervals.models import ThresholdColoring

HALF = Fraction(1, 2)


class TestFormatRational:
    """Tests for format_rational."""

    def test_integer(self) -> None:
        """Integers carry no denominator."""
        assert format_rational(Fraction(4)) == "4"

    def test_reduced_fraction(self) -> None:
        """Fractions are written in lowest terms."""
        assert format_rational(Fraction(6, 4)) == "3/2"


class TestToPayload:
    """Tests for to_payload and dumps."""

    def test_interval_fields(self, path_interval: IntervalRep) -> None:
        """Coordinates are strings keyed by vertex id.

        Args:
            path_interval (IntervalRep): Centers 0, 1/2 and 2.
        """
        assert to_payload(path_interval) == {
            "kind": "interval",
            "diameter": "1",
            "coords": {"0": "0", "1": "1/2", "2": "2"},
        }

    def test_disk_fields(self, path_disks: DiskRep) -> None:
        """Disk points stay integer pairs.

        Args:
            path_disks (DiskRep): Points at x = 0, 2 and 5.
        """
        payload = to_payload(path_disks)
        assert payload["diameter"] == 2
        assert payload["points"]["2"] == [5, 0]

    def test_decomposition_fields(self) -> None:
        """Sets are sorted lists and I-pairs are triples."""
        dec = Decomposition(frozenset({3, 0}), frozenset({1, 2}), (IPair(0, 3, 1),))
        assert to_payload(dec) == {
            "kind": "decomposition",
            "iset": [0, 3],
            "fset": [1, 2],
            "ipairs": [[0, 3, 1]],
        }

    def test_dumps_is_sorted_with_trailing_newline(
        self,
        path_interval: IntervalRep,
    ) -> None:
        """The text has sorted keys and ends with a newline.

        Args:
            path_interval (IntervalRep): Centers 0, 1/2 and 2.
        """
        text = dumps(path_interval)
        assert text.endswith("}\n")
        assert list(json.loads(text)) == ["coords", "diameter", "kind"]

    def test_unsupported_object(self) -> None:
        """Objects without a JSON form are refused."""
        with pytest.raises(TypeError, match="No JSON form for int"):
            to_payload(3)  # type: ignore[arg-type]


class TestLoads:
    """Tests for loads and from_payload."""

    @pytest.mark.parametrize(
        "obj",
        [
            IntervalRep({0: HALF, 1: Fraction(7, 3)}, Fraction(5, 2)),
            ThresholdColoring({0: 1, 1: 3}, color_range=3, threshold=1),
            DiskRep({0: (0, 0), 1: (-2, 1)}),
            Decomposition(frozenset({0}), frozenset({1, 2})),
            SquareContactRep({0: (0, 0), 1: (Fraction(3, 2), 0)}, Fraction(3, 2)),
            CubeScene({0: (0, 0, 1), 1: (HALF, 1, 2)}, Fraction(3, 2)),
        ],
    )
    def test_documents_load_back(self, obj: object) -> None:
        """Every kind of document loads back to an equal object.

        Args:
            obj (object): The object to write and read.
        """
        assert loads(dumps(obj)) == obj  # type: ignore[arg-type]

    def test_invalid_json(self) -> None:
        """JSON syntax errors report their position."""
        with pytest.raises(PayloadError, match="invalid JSON at line 1"):
            loads("{")

    def test_not_an_object(self) -> None:
        """A top-level array is refused."""
        with pytest.raises(PayloadError) as exc_info:
            from_payload([1, 2])
        assert exc_info.value.field == "$"

    def test_missing_kind(self) -> None:
        """The kind field is required."""
        with pytest.raises(PayloadError, match="field 'kind': missing"):
            from_payload({})

    def test_unknown_kind(self) -> None:
        """Only the known kinds are accepted."""
        with pytest.raises(PayloadError, match="unknown kind 'spheres'"):
            from_payload({"kind": "spheres"})

    def test_wrong_field_type(self) -> None:
        """Coordinates must be strings."""
        with pytest.raises(PayloadError) as exc_info:
            from_payload({"kind": "interval", "diameter": "1", "coords": {"0": 1}})
        assert exc_info.value.field == "coords"

    def test_bad_rational(self) -> None:
        """Unparseable rationals name their field."""
        with pytest.raises(PayloadError, match="field 'coords.0'"):
            from_payload({"kind": "interval", "diameter": "1", "coords": {"0": "x"}})

    def test_bad_vertex_id(self) -> None:
        """Vertex ids must be integers."""
        with pytest.raises(PayloadError, match="vertex id must be an integer"):
            from_payload({"kind": "interval", "diameter": "1", "coords": {"a": "0"}})

    def test_disk_point_with_three_coordinates(self) -> None:
        """Disk points have exactly two coordinates."""
        payload = {"kind": "disk", "diameter": 2, "points": {"0": [0, 0, 0]}}
        with pytest.raises(PayloadError, match="field 'points.0'"):
            from_payload(payload)

    def test_invalid_coloring_is_reported_under_its_kind(self) -> None:
        """Domain validation errors become payload errors."""
        payload = {
            "kind": "coloring",
            "color_range": 2,
            "threshold": 1,
            "colors": {"0": 3},
        }
        with pytest.raises(PayloadError, match="field 'coloring': Color 3"):
            from_payload(payload)

    def test_cube_corner_with_two_coordinates(self) -> None:
        """Cube corners have three coordinates."""
        payload = {"kind": "cubes", "side": "1", "corners": {"0": ["0", "0"]}}
        with pytest.raises(PayloadError, match="expected 3 coordinates, got 2"):
            from_payload(payload)
