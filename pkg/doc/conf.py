#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# LevyFock documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import os
import re
from datetime import datetime

# -- General configuration ------------------------------------------------

# Add any Sphinx extension module names here, as strings.
extensions = ["sphinx.ext.mathjax"]

# Add any paths that contain templates here, relative to this directory.
templates_path = ["_templates"]

source_suffix = ".rst"

# The master toctree document.
master_doc = "index"

# General information about the project.
year = datetime.now().year
project = "LevyFock"
copyright = "{0} LevyFock developers".format(year)
author = "LevyFock developers"

# The version info is read from src/levy_fock/version.py
with open(
    os.path.join(os.path.dirname(__file__), "..", "src", "levy_fock", "version.py"),
    encoding="utf-8",
) as f:
    release = re.search(r'__version__ = "([^"]+)"', f.read()).group(1)
# The short X.Y version.
version = ".".join(release.split(".")[:2])

language = "en"

# List of patterns, relative to source directory, that match files and
# directories to ignore when looking for source files.
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "sphinx"

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_sidebars = {
    "**": ["about.html", "navigation.html", "relations.html", "searchbox.html"]
}

html_theme_options = {
    "description": "Lévy processes, cocycles and Fock space",
    "sidebar_collapse": False,
    "fixed_sidebar": True,
}

html_static_path = []

# Output file base name for HTML help builder.
htmlhelp_basename = "LevyFockdoc"


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
    # The paper size ('letterpaper' or 'a4paper').
    "papersize": "a4paper",
    # The font size ('10pt', '11pt' or '12pt').
    "pointsize": "10pt",
    # Latex figure (float) alignment
    "figure_align": "htbp",
}

# Grouping the document tree into LaTeX files. List of tuples
# (source start file, target name, title,
#  author, documentclass [howto, manual, or own class]).
latex_documents = [
    (master_doc, "LevyFock.tex", "LevyFock Documentation", author, "manual")
]


# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "levyfock", "LevyFock Documentation", [author], 1)]


# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (
        master_doc,
        "LevyFock",
        "LevyFock Documentation",
        author,
        "LevyFock",
        "Lévy triplets, positive definite functions, cocycles and Fock space",
        "Mathematics",
    )
]
