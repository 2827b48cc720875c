# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# Only the options shannonreg changes from the defaults are set here. See
# http://www.sphinx-doc.org/en/master/config for the full list.

# -- Path setup --------------------------------------------------------------

import os
import sys


sys.path.append(os.path.join(os.path.dirname(__name__), ".."))


# -- Project information -----------------------------------------------------


def get_version():
    import toml

    toml_path = os.path.join(os.path.dirname(__file__), "..", "pyproject.toml")

    with open(toml_path, "r") as fopen:
        pyproject = toml.load(fopen)

    return pyproject["tool"]["poetry"]["version"]


project = u"shannonreg"
copyright = u"2026, the shannonreg developers"
author = u"the shannonreg developers"

version = get_version()
release = version


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
]

autodoc_default_options = {"members": True, "undoc-members": True}
autodoc_member_order = "bysource"

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = [u"_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {"navigation_depth": -1}
htmlhelp_basename = "shannonregdoc"


# -- Options for LaTeX and manual page output --------------------------------

latex_documents = [
    (
        master_doc,
        "shannonreg.tex",
        u"shannonreg Documentation",
        author,
        "manual",
    )
]

man_pages = [
    (master_doc, "shannonreg", u"shannonreg Documentation", [author], 1)
]


# -- Options for intersphinx extension ---------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
    "scipy": ("https://docs.scipy.org/doc/scipy", None),
    "pandas": ("https://pandas.pydata.org/pandas-docs/stable", None),
}

add_module_names = False
