"""
supra synthesizes recursion-free programs from first-order specifications by
saturation with answer clauses.
"""
__version__ = "0.1"
