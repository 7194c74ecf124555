"""Exact symplectic cohomology of disk and annulus bundles in O(-k) -> CP^m."""

__version__ = "0.1.0"
