"""Procedural 2D-geometry perception benchmarks: generation, filtering, evaluation."""

__version__ = "0.1.0"
