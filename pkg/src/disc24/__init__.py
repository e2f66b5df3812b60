"""Exact verification suites for discriminant-24 cubic fourfold computations."""

__version__ = "0.1.0"
