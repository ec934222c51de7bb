"""Symbolic toolkit for quantum toroidal algebras: presentations,
(anti)automorphisms, braid-group actions, a rewriting verifier, and an exact
matrix oracle."""

__version__ = "0.1.0"
