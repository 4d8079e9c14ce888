"""Invariants of moduli stacks of cyclic covers of projective spaces."""

__version__ = "0.1.0"
