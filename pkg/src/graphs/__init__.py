"""
Graphs and acyclic orientations
"""
