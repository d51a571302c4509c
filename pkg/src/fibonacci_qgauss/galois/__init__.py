"""Subspace and flag enumeration over small prime fields."""

from fibonacci_qgauss.galois.field import PrimeField, is_prime
from fibonacci_qgauss.galois.subspaces import (
    MAX_CHAIN_DIMENSION,
    MAX_FIELD_SIZE,
    MAX_SUBSPACE_DIMENSION,
    SubspaceCount,
    check_chain_factorization,
    check_duality,
    check_rref_uniqueness,
    count_maximal_chains,
    count_subspaces,
    rref_matrices,
    row_space,
    subspace_counts,
    verify_lattice_counts,
)

__all__ = [
    "MAX_CHAIN_DIMENSION",
    "MAX_FIELD_SIZE",
    "MAX_SUBSPACE_DIMENSION",
    "PrimeField",
    "SubspaceCount",
    "check_chain_factorization",
    "check_duality",
    "check_rref_uniqueness",
    "count_maximal_chains",
    "count_subspaces",
    "is_prime",
    "row_space",
    "rref_matrices",
    "subspace_counts",
    "verify_lattice_counts",
]
