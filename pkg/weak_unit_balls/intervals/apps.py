"""Define configuration for the "intervals" application in Django."""

from django.apps import AppConfig


class IntervalsConfig(AppConfig):
    """Configure settings and attributes for the "intervals" application."""

    name = "weak_unit_balls.intervals"
    verbose_name = "Weak unit interval representations"
