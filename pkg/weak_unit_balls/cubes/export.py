"""Wavefront OBJ export of cube scenes."""

from fractions import Fraction

from .models import CubeScene

_FACES = (
    (1, 2, 4, 3),
    (5, 7, 8, 6),
    (1, 5, 6, 2),
    (3, 4, 8, 7),
    (1, 3, 7, 5),
    (2, 6, 8, 4),
)


def _number(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{float(x):.6f}"


def cube_scene_to_obj(scene: CubeScene) -> str:
    """Return the scene as OBJ text with one object of eight vertices per cube.

    Args:
        scene (CubeScene): The cubes.

    Returns:
        str: The OBJ document, identical for identical scenes.
    """
    lines = [f"# {len(scene.corners)} cubes of side {scene.side}"]
    for index, (v, (x, y, z)) in enumerate(scene.corners.items()):
        lines.append(f"o v{v}")
        s = scene.side
        for dx in (0, s):
            for dy in (0, s):
                for dz in (0, s):
                    coords = (_number(x + dx), _number(y + dy), _number(z + dz))
                    lines.append("v " + " ".join(coords))
        offset = 8 * index
        for face in _FACES:
            lines.append("f " + " ".join(str(offset + i) for i in face))
    return "\n".join(lines) + "\n"
