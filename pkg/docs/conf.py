#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# vstatelib documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
import os
import sys

from sphinx.ext.autodoc import between

sys.path.insert(0, os.path.abspath('..'))

autoclass_content = "both"

# -- General configuration ------------------------------------------------
extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'sphinx.ext.autosummary']
autosummary_generate = True
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'vstatelib'
copyright = '2026, vstatelib contributors'
author = 'vstatelib contributors'
version = ''
release = ''
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', '**.inc.rst']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------
html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'navigation_depth': 4,
}
htmlhelp_basename = 'vstatelibdocs'

# -- Options for LaTeX output ---------------------------------------------
latex_documents = [
    (master_doc, 'vstatelib.tex', 'vstatelib Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------
man_pages = [
    (master_doc, 'vstatelib', 'vstatelib Documentation', [author], 1),
]

modindex_common_prefix = ['vstatelib.']

rst_prolog = """
.. role:: pycode(code)
   :language: python3

.. role:: ibf
    :class: ibf
"""


def setup(app):
    # ignore everything between lines that contain the word IGNORE
    app.connect('autodoc-process-docstring', between('^.*IGNORE.*$',
                                                     exclude=True))
    return app
