"""
Permutation combinatorics: toppling, excedances, Genocchi numbers, bijections
"""
