"""Pytest plugins and test support infrastructure."""
