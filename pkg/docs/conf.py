# Sphinx configuration of the cpkin documentation
import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import cpkin  # noqa: E402

project = "cpkin"
author = "Max Fischer"
copyright = "2026, Max Fischer"
version = release = cpkin.__version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
]
autodoc_member_order = "bysource"

exclude_patterns = ["_build"]
html_theme = "alabaster"
