"""Exact computations of Alexander ideals of twist-roll-spun 2-knots and of
the real Seiberg-Witten degree |deg| through graded roots and Lefschetz numbers."""

__version__ = "0.1.0"
