"""Starter project folder.  Rename it to match your first project."""
