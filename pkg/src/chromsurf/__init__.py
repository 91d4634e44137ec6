"""Chromatic numbers of triangulated surfaces and 3-manifolds built from Steiner triple systems."""

__version__ = "0.1.0"
