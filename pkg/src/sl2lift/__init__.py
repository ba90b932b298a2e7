"""Exact Chevalley algebras, distinguished parabolics and integral sl2-triples mod p."""

__version__ = "0.1.0"
