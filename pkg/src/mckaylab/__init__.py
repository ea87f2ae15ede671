"""Exact character tables, McKay graphs, and diameter/bound verification
for small symmetric, alternating and rank-1 Lie-type groups."""

from .exactnum import Cyclotomic, CycParseError, E, sqrt_int

__all__ = ["Cyclotomic", "CycParseError", "E", "sqrt_int"]
__version__ = "0.1.0"
