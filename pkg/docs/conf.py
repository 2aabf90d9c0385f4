# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

project_root = os.path.abspath('..')
try:
    import lincost  # noqa: F401
except ImportError:
    sys.path.insert(0, project_root)

# -- Project information -----------------------------------------------------

project = 'LinCost'
project_lower = project.lower()
copyright = '2026, The LinCost Authors'
author = 'The LinCost Authors'
release = '0.1.0'
version = release

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.doctest',
    'sphinx.ext.napoleon',  # Google Docstring Format
    'recommonmark',
    'sphinx_markdown_tables',
]

autodoc_inherit_docstrings = True
add_module_names = False
autodoc_default_options = {
    'member-order': 'bysource',
    'show-inheritance': True
}

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

import sphinx_rtd_theme  # noqa: E402

html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_theme = 'sphinx_rtd_theme'
extensions.append("sphinx_rtd_theme")
html_theme_options = {
    'display_version': True,
    'collapse_navigation': False,
}
htmlhelp_basename = project_lower + 'doc'
