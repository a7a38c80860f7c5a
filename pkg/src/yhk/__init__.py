"""Exact computational kernel for affine and cyclotomic Yokonuma-Hecke
algebras: PBW normal-form arithmetic, cyclotomic quotients, simple-module
constructions and branching, the module-category equivalence with sums of
tensor products of affine Hecke algebras, and the crystal-graph
combinatorics of the modular branching rules."""

__version__ = "0.1.0"
