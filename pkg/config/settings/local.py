"""Django local settings for the weak unit ball representation tools."""

# pylint: disable=wildcard-import, unused-wildcard-import

from .base import *  # noqa: F403
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = True
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env(
    "DJANGO_SECRET_KEY",
    default="q3C2hVb1mWZp0rTn8sYdK4uLx7eJ6aGfN9oPiR5tHwQyE3zDcVbUjMkSlXnAgOe",
)
