"""Exact computations with quaternion group rings, W(F4), a rank-16 lattice,
a binary code of length 16 and octonion matrices."""

__version__ = "0.1.0"
