"""Define configuration for the "disks" application in Django."""

from django.apps import AppConfig


class DisksConfig(AppConfig):
    """Configure settings and attributes for the "disks" application."""

    name = "weak_unit_balls.disks"
    verbose_name = "Weak unit disk representations"
