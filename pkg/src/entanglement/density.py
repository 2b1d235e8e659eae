"""Reduced density matrices and von Neumann entropy."""

import math
from typing import Iterable, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from src.constants import IDENTITY_TOL, N_SITES
from src.exceptions import BadSubsystem, InvalidDensity
from src.model import FourSpinState
from src.oplin import ComplexMatrix, freeze, hermitian_eig, is_hermitian
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.entanglement")

NEGATIVE_EIGEN_TOL = 1e-10
CLAMP_TOL = 1e-12

# Printed marginal of S+B over sites {2,3,4}; 4x4 with zero trace as printed
PRINTED_REDUCED_DENSITY = freeze(
    np.array(
        [
            [1, 1j, 0, 0],
            [-1j, -1, 0, 0],
            [0, 0, 1, -1j],
            [0, 0, -1j, -1],
        ],
        dtype=complex,
    )
)


class DensityMatrix(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: np.ndarray
    subsystem: Tuple[int, ...]

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        return freeze(np.asarray(value, dtype=complex))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def check(self, tol: float = IDENTITY_TOL) -> None:
        """
        Raises:
            InvalidDensity: If the matrix is not Hermitian, not unit trace, or has a negative eigenvalue.
        """
        if not is_hermitian(self.matrix, tol):
            raise InvalidDensity("Density matrix is not Hermitian")
        trace = complex(np.trace(self.matrix))
        if abs(trace - 1) >= tol:
            raise InvalidDensity(f"Trace is {trace:.6g}, expected 1", trace=abs(trace))
        lowest = float(hermitian_eig(self.matrix).eigenvalues[0])
        if lowest < -NEGATIVE_EIGEN_TOL:
            raise InvalidDensity(f"Negative eigenvalue {lowest:.3e}", eigenvalue=lowest)

    def eigenvalues(self) -> List[float]:
        values = hermitian_eig(self.matrix).eigenvalues
        return [0.0 if abs(v) < CLAMP_TOL else float(v) for v in values]


def _subsystem(keep: Iterable[int]) -> Tuple[int, ...]:
    kept = tuple(sorted(set(int(k) for k in keep)))
    if not kept or len(kept) >= N_SITES or any(k < 1 or k > N_SITES for k in kept):
        raise BadSubsystem(
            f"Kept sites {list(kept)} must be a nonempty proper subset of 1..{N_SITES}"
        )
    return kept


def partial_trace(state: FourSpinState, keep: Iterable[int]) -> DensityMatrix:
    """
    Reduced density matrix of |psi><psi| on the kept sites.

    Site 1 is the most significant bit, so the kept sites index rows of rho
    in ascending site order.

    Raises:
        BadSubsystem: If keep is empty, the whole system, or names a site outside 1..4.
    """
    kept = _subsystem(keep)
    traced = tuple(k for k in range(1, N_SITES + 1) if k not in kept)
    tensor = state.amplitudes.reshape((2,) * N_SITES)
    ordered = np.transpose(tensor, [k - 1 for k in kept + traced])
    m = ordered.reshape(2 ** len(kept), 2 ** len(traced))
    return DensityMatrix(matrix=m @ m.conj().T, subsystem=kept)


def von_neumann_entropy(rho: DensityMatrix, base: Literal["e", "2"] = "e") -> float:
    """-sum l log l over the eigenvalues of rho, with 0 log 0 = 0."""
    rho.check()
    log = math.log if base == "e" else math.log2
    entropy = -sum(l * log(l) for l in rho.eigenvalues() if l > CLAMP_TOL)
    return max(0.0, entropy)


def printed_reduced_density() -> ComplexMatrix:
    return PRINTED_REDUCED_DENSITY


def printed_eigenvalue_magnitudes(matrix: Optional[ComplexMatrix] = None) -> List[float]:
    """Descending |eigenvalues| of a possibly non-Hermitian matrix; the printed one gives sqrt2, sqrt2, 0, 0."""
    m = PRINTED_REDUCED_DENSITY if matrix is None else matrix
    values = np.abs(np.linalg.eigvals(m))
    # the nilpotent block only resolves to about sqrt(machine eps)
    return sorted((0.0 if v < 1e-6 else float(v) for v in values), reverse=True)


def unnormalized_entropy_magnitude(matrix: Optional[ComplexMatrix] = None) -> float:
    """sum |l| ln |l| over the unnormalized eigenvalue magnitudes; sqrt2 ln 2 for the printed matrix."""
    return float(sum(l * math.log(l) for l in printed_eigenvalue_magnitudes(matrix) if l > 0))
