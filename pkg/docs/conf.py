"""Configuration file for the Sphinx documentation builder.

Builds the reference for the weak unit ball representation tools from the module
docstrings (Google style, through napoleon). Django is set up first so that the
management command and the app configs import cleanly.

Example:
    To build the documentation, run:
        $ make html
"""

import os
import sys
from pathlib import Path

import django

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")
django.setup()

# -- Project information -----------------------------------------------------

# pylint: disable=invalid-name
project = "Weak Unit Balls"
copyright = "2024, the Weak Unit Balls developers"  # pylint: disable=redefined-builtin
author = "the Weak Unit Balls developers"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
]

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
