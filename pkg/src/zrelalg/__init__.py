"""Exact arithmetic for sign-stable diagram algebras.

Three algebras over the polynomial ring in one variable, realized on
bases of two-row sign-stable set partitions: the full algebra of
Z2-relations, its signed-partition subalgebra, and the doubled copy of
the ordinary partition algebra.  The package enumerates diagram bases,
multiplies elements, factors diagrams through marked half-diagrams,
builds the Murphy-layered cellular basis, and computes Gram matrices,
radicals and irreducible-module dimensions -- all in exact arithmetic.
"""

from .dalg import ALGEBRAS, AlgebraElement, basis, dim_formula, in_basis
from .repn import (action_matrix, cell_module, gram, gram_bruteforce,
                   irreducible_table, radical_and_irreducible)
from .ring import Poly, PrimeField, Rationals, ScalarField
from .tabular import (CellLabel, HalfDiagram, cellular_basis, decompose,
                      enumerate_M, phi, reconstruct, verify_table_datum)
from .zpart import ZStablePartition, enumerate_rk, propagating_data

__version__ = "0.1.0"

__all__ = [
    "ALGEBRAS", "AlgebraElement", "CellLabel", "HalfDiagram", "Poly",
    "PrimeField", "Rationals", "ScalarField", "ZStablePartition",
    "action_matrix", "basis", "cell_module", "cellular_basis", "decompose",
    "dim_formula", "enumerate_M", "enumerate_rk", "gram", "gram_bruteforce",
    "in_basis", "irreducible_table", "phi", "propagating_data",
    "radical_and_irreducible", "reconstruct", "verify_table_datum",
]
