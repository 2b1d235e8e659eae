"""Dense complex matrices: construction, tensor products and (anti)commutators."""

from typing import Any, Dict, Iterable

import numpy as np
import numpy.typing as npt

from src.constants import IDENTITY_TOL
from src.exceptions import DimensionMismatch

ComplexMatrix = npt.NDArray[np.complex128]

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

for _m in (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)


def freeze(m: np.ndarray) -> ComplexMatrix:
    """Return ``m`` as a read-only complex array."""
    out = np.array(m, dtype=complex)
    out.setflags(write=False)
    return out


def as_matrix(m: Any) -> ComplexMatrix:
    """
    Coerce nested sequences or arrays into a 2-D complex matrix.

    Raises:
        DimensionMismatch: If the input is not a nonempty 2-D array.
    """
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionMismatch(f"Expected a nonempty 2-D matrix, got shape {arr.shape}")
    return arr


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Tensor product with entry ((i*b.rows+k), (j*b.cols+l)) = a[i,j]*b[k,l]."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(factors: Iterable[ComplexMatrix]) -> ComplexMatrix:
    result = np.ones((1, 1), dtype=complex)
    for factor in factors:
        result = np.kron(result, as_matrix(factor))
    return result


def _require_same_square(a: ComplexMatrix, b: ComplexMatrix) -> None:
    if a.shape[0] != a.shape[1] or a.shape != b.shape:
        raise DimensionMismatch(
            f"Commutators need square matrices of equal size, got {a.shape} and {b.shape}"
        )


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    _require_same_square(a, b)
    return a @ b - b @ a


def anticommutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    _require_same_square(a, b)
    return a @ b + b @ a


def frobenius(m: ComplexMatrix) -> float:
    return float(np.linalg.norm(m))


def distance(a: ComplexMatrix, b: ComplexMatrix) -> float:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"Cannot compare shapes {a.shape} and {b.shape}")
    return frobenius(a - b)


def is_hermitian(m: ComplexMatrix, tol: float = IDENTITY_TOL) -> bool:
    m = as_matrix(m)
    return m.shape[0] == m.shape[1] and frobenius(m - m.conj().T) < tol


def is_unitary(m: ComplexMatrix, tol: float = IDENTITY_TOL) -> bool:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return frobenius(m.conj().T @ m - np.eye(m.shape[0])) < tol


def matrix_to_json(m: ComplexMatrix) -> Dict[str, Any]:
    """Serialize to ``{"rows", "cols", "re", "im"}`` in row-major order."""
    m = as_matrix(m)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def matrix_from_json(payload: Dict[str, Any]) -> ComplexMatrix:
    re = np.asarray(payload["re"], dtype=float)
    im = np.asarray(payload["im"], dtype=float)
    if re.shape != im.shape or re.shape != (payload["rows"], payload["cols"]):
        raise DimensionMismatch("Matrix JSON rows/cols disagree with the entry arrays")
    return as_matrix(re + 1j * im)
