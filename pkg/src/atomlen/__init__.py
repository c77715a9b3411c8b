"""Exact combinatorics of cores, abaci and affine Grassmannian lengths."""

__version__ = "0.1.0"
