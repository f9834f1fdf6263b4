"""Exact-arithmetic toolkit for multivariable Alexander polynomials,
jump loci of rank-one local systems, quasi-projectivity obstructions,
and Seifert link invariants."""

__version__ = "0.1.0"
