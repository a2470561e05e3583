"""
dotgraph
Dot product graphs over finite product rings, with brute-force
verification of their closed-form decompositions.
"""

__version__ = '1.0.0'
