"""
Matroid tools: connectivity, constructions, canonical forms, recognition,
enumeration and the census.
"""
