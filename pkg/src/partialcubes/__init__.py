"""Geodesic convexity and hull numbers on partial cubes."""

__version__ = "0.1.0"
