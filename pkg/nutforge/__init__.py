"""nutforge package.

Constructs, certifies and enumerates circulant nut graphs with exact integer
arithmetic, and recomputes the finite cyclotomic checks behind the
order/degree existence theorem.
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
