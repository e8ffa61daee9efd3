"""Instances layer - Mallows benchmark generation and dataset files."""
