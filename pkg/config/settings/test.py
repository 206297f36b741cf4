"""With these settings, tests run faster."""

# pylint: disable=wildcard-import, unused-wildcard-import
from .base import *  # noqa: F403
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="Vx8cT1pLqN4zR7wYs2KfB6hJm0dGa9eUoIiC3tXnZ5bWlQyHrSgAvEkDjMuPFOs",
)
# https://docs.djangoproject.com/en/dev/ref/settings/#test-runner
TEST_RUNNER = "django.test.runner.DiscoverRunner"
