"""Version of {{ conda_pypi_package_dist_name }} as recorded at release time."""

__version__ = "0.1.0"
