"""
Braid groups, their extensions of S_n and the presentations that certify them.
"""
