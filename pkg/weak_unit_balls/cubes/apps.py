"""Define configuration for the "cubes" application in Django."""

from django.apps import AppConfig


class CubesConfig(AppConfig):
    """Configure settings and attributes for the "cubes" application."""

    name = "weak_unit_balls.cubes"
    verbose_name = "Unit cube contact representations"
