"""Define configuration for the "graphs" application in Django."""

from django.apps import AppConfig


class GraphsConfig(AppConfig):
    """Configure settings and attributes for the "graphs" application."""

    name = "weak_unit_balls.graphs"
    verbose_name = "Labeled graphs"
