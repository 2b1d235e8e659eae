"""Energies per plaquette sector: the closed-form branches and the exact block spectrum."""

import math
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel

from src.constants import EIGEN_TOL
from src.model import Couplings, GaugeSector, build_hamiltonian, numerical_spectrum, sector_projector
from src.oplin import hermitian_eig
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.fermionization")


class SectorEnergies(BaseModel):
    sector: Tuple[int, int, int]
    energies: List[float]
    in_spectrum: List[bool]

    @property
    def all_in_spectrum(self) -> bool:
        return all(self.in_spectrum)


def _in_spectrum(value: float, spectrum: np.ndarray, tol: float) -> bool:
    return bool(np.min(np.abs(spectrum - value)) < tol)


def sector_energies(s: GaugeSector, c: Couplings, tol: float = EIGEN_TOL) -> SectorEnergies:
    """
    The four-branch gauge-pattern formula
    +-sqrt(4Jx^2 + 2Jz^2(1+s3s1) + 2Jy^2(1+s2s1)) +- sqrt(2Jz^2(1-s3s1) + 2Jy^2(1-s2s1)) + Jp(s1s2+s2s3+s3s1),
    each value flagged by membership in the exact spectrum.

    The formula is exact in the homogeneous sectors; elsewhere some branches fall
    outside the spectrum and the flags say which.
    """
    s1, s2, s3 = s.signs
    outer = math.sqrt(4 * c.jx**2 + 2 * c.jz**2 * (1 + s3 * s1) + 2 * c.jy**2 * (1 + s2 * s1))
    inner = math.sqrt(2 * c.jz**2 * (1 - s3 * s1) + 2 * c.jy**2 * (1 - s2 * s1))
    shift = c.jp * s.frustration_sum
    energies = [a * outer + b * inner + shift for a in (1, -1) for b in (1, -1)]
    spectrum = numerical_spectrum(c).eigenvalues
    return SectorEnergies(
        sector=s.signs,
        energies=energies,
        in_spectrum=[_in_spectrum(e, spectrum, tol) for e in energies],
    )


def sector_levels(s: GaugeSector, c: Couplings) -> List[float]:
    """Closed-form pair of energies in sector s, ascending."""
    s1, s2, s3 = s.signs
    if s1 == s2 == s3:
        radius = 2 * math.sqrt(c.jx**2 + c.jy**2 + c.jz**2)
    elif s1 == s2:
        radius = 2 * abs(c.jz)
    elif s2 == s3:
        radius = 2 * abs(c.jx)
    else:
        radius = 2 * abs(c.jy)
    shift = c.jp * s.frustration_sum
    return [shift - radius, shift + radius]


@lru_cache(maxsize=None)
def sector_basis(s: GaugeSector) -> np.ndarray:
    """Orthonormal columns spanning the range of the sector projector."""
    spectrum = hermitian_eig(sector_projector(s))
    return spectrum.eigenvectors[:, spectrum.eigenvalues > 0.5]


def sector_spectrum(s: GaugeSector, c: Couplings) -> List[float]:
    """Exact energies of H restricted to sector s, ascending."""
    v = sector_basis(s)
    block = v.conj().T @ build_hamiltonian(c) @ v
    return [float(e) for e in hermitian_eig(block).eigenvalues]


class SectorUnion(BaseModel):
    rows: Dict[str, List[float]]
    distance: float
    closed_form_distance: float

    def passed(self, tol: float = EIGEN_TOL) -> bool:
        return self.distance < tol and self.closed_form_distance < tol


def sector_union(c: Couplings) -> SectorUnion:
    """Join the eight 2-level blocks and compare against the full 16-level spectrum."""
    full = numerical_spectrum(c).eigenvalues
    rows: Dict[str, List[float]] = {}
    exact: List[float] = []
    closed: List[float] = []
    for s in GaugeSector.all_sectors():
        block = sector_spectrum(s, c)
        rows[",".join(f"{x:+d}" for x in s.signs)] = block
        exact.extend(block)
        closed.extend(sector_levels(s, c))
    distance = float(np.max(np.abs(np.sort(exact) - full)))
    closed_distance = float(np.max(np.abs(np.sort(closed) - full)))
    logger.debug(f"Sector union distance {distance:.3e}, closed form {closed_distance:.3e}")
    return SectorUnion(rows=rows, distance=distance, closed_form_distance=closed_distance)


def sector_table(c: Couplings, tol: float = EIGEN_TOL) -> List[dict]:
    rows = []
    for s in GaugeSector.all_sectors():
        printed = sector_energies(s, c, tol)
        rows.append(
            {
                "sector": list(s.signs),
                "energies": printed.energies,
                "in_spectrum": printed.all_in_spectrum,
                "membership": printed.in_spectrum,
                "levels": sector_spectrum(s, c),
            }
        )
    return rows
