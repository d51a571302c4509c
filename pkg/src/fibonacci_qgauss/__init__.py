"""Fibonacci q-Gauss - exact Gaussian triangles and the Fibonacci q-Gauss family."""

__version__ = "0.1.0"
