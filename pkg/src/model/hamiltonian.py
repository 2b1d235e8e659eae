"""Hamiltonian, plaquette operators, analytic levels and conservation checks."""

import math
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, Field

from src.constants import DIM, EIGEN_TOL, IDENTITY_TOL, LEVEL_TOL
from src.exceptions import BadIndex
from src.model.types import Couplings, FourSpinState, LevelEntry, LevelTable
from src.oplin import (
    ComplexMatrix,
    HermitianSpectrum,
    PauliString,
    commutator,
    compile_pauli,
    freeze,
    frobenius,
    group_levels,
    hermitian_eig,
)
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.model")

PLAQUETTE_STRINGS: Dict[int, PauliString] = {
    1: PauliString.parse("z1 x2 y3"),
    2: PauliString.parse("z4 y2 x3"),
    3: PauliString.parse("x1 z2 y4"),
    4: PauliString.parse("y1 z3 x4"),
}

# (coupling name, string) for the six two-spin bonds
BOND_STRINGS: Tuple[Tuple[str, PauliString], ...] = (
    ("jx", PauliString.parse("x1 x3")),
    ("jy", PauliString.parse("y1 y2")),
    ("jz", PauliString.parse("z2 z3")),
    ("jx", PauliString.parse("x2 x4")),
    ("jy", PauliString.parse("y3 y4")),
    ("jz", PauliString.parse("z1 z4")),
)

X_STRING = PauliString.parse("x1 x2 x3 x4")
Y_STRING = PauliString.parse("y1 y2 y3 y4")
Z_STRING = PauliString.parse("z1 z2 z3 z4")


@lru_cache(maxsize=None)
def plaquette(k: int) -> ComplexMatrix:
    """Compiled plaquette operator S_k, k = 1..4 (S4 runs along the outer boundary)."""
    if k not in PLAQUETTE_STRINGS:
        raise BadIndex(f"Plaquette index {k} outside 1..4")
    return compile_pauli(PLAQUETTE_STRINGS[k])


def plaquette_products() -> ComplexMatrix:
    """S1 S2 + S2 S3 + S3 S1."""
    s1, s2, s3 = plaquette(1), plaquette(2), plaquette(3)
    return freeze(s1 @ s2 + s2 @ s3 + s3 @ s1)


def build_hamiltonian(c: Couplings) -> ComplexMatrix:
    """Six bond terms plus Jp times the three plaquette products."""
    h = np.zeros((DIM, DIM), dtype=complex)
    for name, ps in BOND_STRINGS:
        h += getattr(c, name) * compile_pauli(ps)
    h += c.jp * plaquette_products()
    return freeze(h)


@lru_cache(maxsize=256)
def numerical_spectrum(c: Couplings) -> HermitianSpectrum:
    return hermitian_eig(build_hamiltonian(c))


def numerical_levels(c: Couplings, tol: float = LEVEL_TOL) -> List[Tuple[float, int]]:
    return group_levels(numerical_spectrum(c).eigenvalues, tol)


def analytic_levels(c: Couplings, tol: float = LEVEL_TOL) -> LevelTable:
    """
    Closed-form levels: E_p^± = 3Jp ± 2 sqrt(Jx²+Jy²+Jz²) and E_μ^± = -Jp ± 2Jμ,
    each doubly degenerate. Coincident values merge and join their labels with '|'.
    """
    radius = 2.0 * math.sqrt(c.jx**2 + c.jy**2 + c.jz**2)
    raw = [
        (3 * c.jp + radius, "E_p^+"),
        (3 * c.jp - radius, "E_p^-"),
    ]
    for axis in ("x", "y", "z"):
        j = getattr(c, f"j{axis}")
        raw.append((-c.jp + 2 * j, f"E_{axis}^+"))
        raw.append((-c.jp - 2 * j, f"E_{axis}^-"))
    raw.sort(key=lambda item: item[0])

    entries: List[LevelEntry] = []
    group: List[Tuple[float, str]] = []
    for value, label in raw:
        if group and abs(value - group[-1][0]) < tol:
            group.append((value, label))
            continue
        if group:
            entries.append(_merge(group))
        group = [(value, label)]
    entries.append(_merge(group))
    return LevelTable(entries=entries)


def _merge(group: List[Tuple[float, str]]) -> LevelEntry:
    return LevelEntry(
        energy=float(np.mean([v for v, _ in group])),
        multiplicity=2 * len(group),
        label="|".join(label for _, label in group),
    )


def levels_distance(expected: List[float], actual: List[float]) -> float:
    """Max absolute difference between two sorted-with-multiplicity energy lists."""
    if len(expected) != len(actual):
        return math.inf
    return float(np.max(np.abs(np.sort(expected) - np.sort(actual)))) if expected else 0.0


class ConservationReport(BaseModel):
    couplings: Couplings
    hamiltonian_commutators: Dict[str, float] = Field(default_factory=dict)
    plaquette_commutators: Dict[str, float] = Field(default_factory=dict)
    tolerance: float = IDENTITY_TOL

    @property
    def max_norm(self) -> float:
        values = list(self.hamiltonian_commutators.values()) + list(self.plaquette_commutators.values())
        return max(values) if values else 0.0

    @property
    def passed(self) -> bool:
        return self.max_norm < self.tolerance


def verify_conserved(c: Couplings, tol: float = IDENTITY_TOL) -> ConservationReport:
    """Frobenius norms of [S_k, H] and [S_i, S_j]."""
    h = build_hamiltonian(c)
    report = ConservationReport(couplings=c, tolerance=tol)
    for k in range(1, 5):
        report.hamiltonian_commutators[f"S{k},H"] = frobenius(commutator(plaquette(k), h))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            report.plaquette_commutators[f"S{i},S{j}"] = frobenius(
                commutator(plaquette(i), plaquette(j))
            )
    logger.debug(f"Conservation max commutator norm {report.max_norm:.3e}")
    return report


def flip_all(state: FourSpinState) -> FourSpinState:
    """Apply sigma^x on every site: amplitude k moves to the complement index."""
    flipped = state.amplitudes[::-1].copy()
    return FourSpinState(amplitudes=flipped, label=state.label)


def spectrum_agreement(c: Couplings, tol: float = EIGEN_TOL) -> float:
    """Distance between the analytic and numerical spectra, with multiplicity."""
    analytic = analytic_levels(c).expanded()
    numeric = list(numerical_spectrum(c).eigenvalues)
    distance = levels_distance(analytic, numeric)
    if distance >= tol:
        logger.warning(f"Analytic and numerical levels differ by {distance:.3e} for {c}")
    return distance
