"""Tests for the shared workspace functions."""
