from src.oplin.eigensolver import HermitianSpectrum, group_levels, hermitian_eig
from src.oplin.matrix import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ComplexMatrix,
    anticommutator,
    as_matrix,
    commutator,
    distance,
    freeze,
    frobenius,
    is_hermitian,
    is_unitary,
    kron,
    kron_all,
    matrix_from_json,
    matrix_to_json,
)
from src.oplin.pauli import PAULI, PauliString, compile_pauli, pauli_product, strings_commute

__all__ = [
    "ComplexMatrix",
    "HermitianSpectrum",
    "IDENTITY_2",
    "PAULI",
    "PauliString",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "anticommutator",
    "as_matrix",
    "commutator",
    "compile_pauli",
    "distance",
    "freeze",
    "frobenius",
    "group_levels",
    "hermitian_eig",
    "is_hermitian",
    "is_unitary",
    "kron",
    "kron_all",
    "matrix_from_json",
    "matrix_to_json",
    "pauli_product",
    "strings_commute",
]
