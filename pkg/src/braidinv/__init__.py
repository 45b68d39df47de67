"""Exact symmetric-group invariants of the Orlik-Solomon algebra OS_n and the
Varchenko-Gelfand ring VG_n of the braid arrangement."""

from .arrangement import DomainError, Permutation, hyperplanes, is_nbc, nbc_count, nbc_monomials
from .gc_algebra import GCElement, gc_reduce, quotient_basis
from .invariants import HilbertPolynomial, character_dim, hilbert_invariants, hilbert_series, invariant_subspace
from .linalg import SparseMatrix, nullspace_basis, rank
from .os_algebra import OSElement, elem_a, elem_c, elem_g, elem_m
from .symfunc import HSum, h_inner, predicted_invariant_dims
from .theorems import STATEMENTS, VerificationReport, verify, verify_all
from .vg_ring import VGElement, elem_z

__version__ = "0.1.0"

__all__ = [
    "DomainError", "Permutation", "hyperplanes", "is_nbc", "nbc_count", "nbc_monomials",
    "GCElement", "gc_reduce", "quotient_basis",
    "HilbertPolynomial", "character_dim", "hilbert_invariants", "hilbert_series", "invariant_subspace",
    "SparseMatrix", "nullspace_basis", "rank",
    "OSElement", "elem_a", "elem_c", "elem_g", "elem_m",
    "HSum", "h_inner", "predicted_invariant_dims",
    "STATEMENTS", "VerificationReport", "verify", "verify_all",
    "VGElement", "elem_z",
]
