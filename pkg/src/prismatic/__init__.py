"""Rotation-system toolkit for genus embeddings of prism graphs Kn x K2."""

__version__ = "0.1.0"
