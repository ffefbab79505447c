"""Sphinx configuration for the {{ package_dir_name }} documentation."""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as dist_version

project = "{{ project_name }}"
copyright = "{{ license_holders }}"
author = "{{ contributors }}"

try:
    release = dist_version("{{ conda_pypi_package_dist_name }}")
except PackageNotFoundError:
    release = "0.1.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
]

exclude_patterns = ["build"]

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
