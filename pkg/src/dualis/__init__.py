"""dualis: exact-arithmetic invariants of projective duality."""

__version__ = "0.1.0"
