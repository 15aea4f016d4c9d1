"""
modbraid - computable quotients of the braid group.

Symmetric-group and braid-word machinery, the extensions G_n, G_n^t and Z_n of the
symmetric group, their classifying 2-cocycles, and exhaustive small-n verification
suites with machine-readable reports.
"""

__version__ = "1.0.0"
