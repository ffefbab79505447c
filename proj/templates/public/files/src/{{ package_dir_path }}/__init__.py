"""{{ project_short_description }}"""

from {{ package_dir_name }}.version import __version__

__all__ = ["__version__"]
