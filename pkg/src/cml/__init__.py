"""Maximal-weight multiplicities of affine type A crystals and their combinatorial models."""

__version__ = "0.1.0"
