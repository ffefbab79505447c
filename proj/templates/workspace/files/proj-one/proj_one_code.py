"""Analysis code for the starter project.

Helpers worth reusing across projects belong in the workspace-level
``shared_functions.py`` instead of here.
"""
