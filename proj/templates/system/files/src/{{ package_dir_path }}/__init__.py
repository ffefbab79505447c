"""{{ project_name }}: Python package installable from a local clone."""
