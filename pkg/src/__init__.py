"""
toppleperm - toppling permutations, excedances, Genocchi numbers and acyclic orientations
"""

__version__ = "0.1.0"
__author__ = "toppleperm contributors"
__description__ = "Exact enumeration and cross-verification for permutation toppling and acyclic orientations"
