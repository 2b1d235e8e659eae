"""Cyclic Jacobi eigensolver for small complex Hermitian matrices."""

from typing import Any, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.constants import IDENTITY_TOL, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL, LEVEL_TOL
from src.exceptions import NotConverged, NotHermitian
from src.oplin.matrix import ComplexMatrix, as_matrix, freeze, frobenius
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.oplin")


class HermitianSpectrum(BaseModel):
    """Ascending eigenvalues with orthonormal eigenvectors stored as columns."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: np.ndarray = Field(..., description="Real eigenvalues, ascending.")
    eigenvectors: np.ndarray = Field(..., description="Column k pairs with eigenvalues[k].")
    sweeps: int = Field(0, description="Jacobi sweeps used.")

    @field_validator("eigenvalues", "eigenvectors", mode="before")
    @classmethod
    def _read_only(cls, value: Any) -> np.ndarray:
        arr = np.array(value)
        arr.setflags(write=False)
        return arr

    def max_residual(self, m: ComplexMatrix) -> float:
        """max_k ||M v_k - lambda_k v_k||."""
        m = as_matrix(m)
        r = m @ self.eigenvectors - self.eigenvectors * self.eigenvalues[np.newaxis, :]
        return float(np.max(np.linalg.norm(r, axis=0))) if r.size else 0.0

    def orthonormality_error(self) -> float:
        v = self.eigenvectors
        return frobenius(v.conj().T @ v - np.eye(v.shape[1]))


def _off_norm(a: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(np.abs(a) ** 2) - np.sum(np.abs(np.diag(a)) ** 2), 0.0)))


def hermitian_eig(
    m: ComplexMatrix,
    *,
    hermitian_tol: float = IDENTITY_TOL,
    rel_tol: float = JACOBI_REL_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> HermitianSpectrum:
    """
    Diagonalize a complex Hermitian matrix with cyclic Jacobi rotations.

    Each rotation acts on the (p, q) plane as G = [[c, s*e], [-s*conj(e), c]]
    where e is the phase of a[p, q]; it zeroes a[p, q] in G^H A G. Sweeps visit
    pairs in row-major order, so the result is deterministic.

    Args:
        m: Square Hermitian matrix.
        hermitian_tol: Allowed ||m - m^H||_F, scaled by max(1, ||m||_F).
        rel_tol: Convergence threshold on the off-diagonal norm relative to ||m||_F.
        max_sweeps: Upper bound on full sweeps.

    Returns:
        HermitianSpectrum: eigenvalues ascending, eigenvectors as columns.

    Raises:
        NotHermitian: If the input is not square or not Hermitian.
        NotConverged: If the sweep budget is exhausted.
    """
    a = np.array(as_matrix(m), dtype=complex)
    n = a.shape[0]
    if a.shape[1] != n:
        raise NotHermitian(f"Matrix is not square: {a.shape}")
    scale = frobenius(a)
    asymmetry = frobenius(a - a.conj().T)
    if asymmetry >= hermitian_tol * max(1.0, scale):
        raise NotHermitian(f"||M - M^H||_F = {asymmetry:.3e}", asymmetry=asymmetry)

    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    if scale == 0.0:
        return HermitianSpectrum(eigenvalues=np.zeros(n), eigenvectors=v, sweeps=0)

    threshold = rel_tol * scale
    # Entries below skip cannot keep the off-diagonal norm above threshold
    skip = max(1e-300, threshold / (2.0 * n))
    sweep = 0
    while _off_norm(a) >= threshold:
        if sweep >= max_sweeps:
            raise NotConverged(f"Off-diagonal norm {_off_norm(a):.3e} after {sweep} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < skip:
                    continue
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    # theta**2 would overflow; t -> 1 / (2 theta)
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                phase = apq / mag
                g = np.array([[c, s * phase], [-s * np.conj(phase), c]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ g
        sweep += 1

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(eigenvalues, kind="stable")
    logger.debug(f"Jacobi converged in {sweep} sweeps for n={n}")
    return HermitianSpectrum(
        eigenvalues=eigenvalues[order], eigenvectors=freeze(v[:, order]), sweeps=sweep
    )


def group_levels(eigenvalues: Any, tol: float = LEVEL_TOL) -> List[Tuple[float, int]]:
    """
    Merge adjacent ascending values closer than ``tol`` into (mean, multiplicity) groups.
    """
    values = [float(x) for x in eigenvalues]
    groups: List[List[float]] = []
    for value in values:
        if groups and abs(value - groups[-1][-1]) < tol:
            groups[-1].append(value)
        else:
            groups.append([value])
    return [(float(np.mean(g)), len(g)) for g in groups]
