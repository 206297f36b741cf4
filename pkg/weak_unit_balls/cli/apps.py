"""Define configuration for the "cli" application in Django."""

from django.apps import AppConfig


class CliConfig(AppConfig):
    """Configure settings and attributes for the "cli" application."""

    name = "weak_unit_balls.cli"
    verbose_name = "Weak representation command line"
