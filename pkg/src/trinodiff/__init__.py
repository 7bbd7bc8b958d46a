"""Exhaustive verification toolkit for trinomial value-sets over GF(2^m)."""

__version__ = "0.1.0"
