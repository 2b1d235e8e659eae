"""Plaquette sectors of states and plaquette actions on the ground space."""

from typing import Dict, Mapping, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.constants import CATALOG_TOL, DIM
from src.exceptions import NotSectorEigenstate, SubspaceLeak
from src.model.catalog import GROUND_NAMES, CatalogEntry, named_state, named_states
from src.model.hamiltonian import flip_all, plaquette
from src.model.types import FourSpinState, GaugeSector, configuration_index
from src.oplin import ComplexMatrix, PauliString, compile_pauli, freeze

SECTOR_TOL = 1e-8


def sector_of(state: FourSpinState, tol: float = SECTOR_TOL) -> GaugeSector:
    """
    Read (s1, s2, s3) off a simultaneous eigenstate of S1, S2, S3.

    Raises:
        NotSectorEigenstate: If any ||(S_k - <S_k>) psi|| >= tol.
    """
    psi = state.amplitudes
    signs = []
    for k in (1, 2, 3):
        s_psi = plaquette(k) @ psi
        expectation = float(np.vdot(psi, s_psi).real)
        residual = float(np.linalg.norm(s_psi - expectation * psi))
        if residual >= tol:
            raise NotSectorEigenstate(
                f"{state.label or 'state'} is not an S{k} eigenstate (residual {residual:.3e})",
                plaquette=k,
                residual=residual,
            )
        signs.append(1 if expectation > 0 else -1)
    return GaugeSector(s1=signs[0], s2=signs[1], s3=signs[2])


def sector_projector(sector: GaugeSector) -> ComplexMatrix:
    """prod_k (I + s_k S_k) / 2 over k = 1, 2, 3."""
    p = np.eye(DIM, dtype=complex)
    for k, s in zip((1, 2, 3), sector.signs):
        p = p @ (np.eye(DIM) + s * plaquette(k)) / 2
    return freeze(p)


def project_onto_sector(state: FourSpinState, sector: GaugeSector, eps: float = 1e-10) -> FourSpinState:
    projected = sector_projector(sector) @ state.amplitudes
    if np.linalg.norm(projected) < eps:
        raise NotSectorEigenstate(
            f"{state.label or 'state'} has no component in sector {sector.signs}"
        )
    label = f"{state.label}{list(sector.signs)}" if state.label else None
    return FourSpinState.from_amplitudes(projected, label=label)


def plaquette_ground_action(
    operator: Optional[ComplexMatrix] = None,
    names: Sequence[str] = GROUND_NAMES,
    catalog: Optional[Mapping[str, CatalogEntry]] = None,
    tol: float = CATALOG_TOL,
) -> ComplexMatrix:
    """
    Matrix M with O g_i = sum_j M_ij g_j over the orthonormal ground basis.

    Raises:
        SubspaceLeak: If O g_i leaves the span by more than ``tol``.
    """
    op = plaquette(1) if operator is None else operator
    basis = np.column_stack([s.amplitudes for s in named_states(names, catalog)])
    images = op @ basis
    m = (basis.conj().T @ images).T
    leak = images - basis @ m.T
    worst = float(np.max(np.linalg.norm(leak, axis=0)))
    if worst >= tol:
        raise SubspaceLeak(f"Operator leaves the ground span (residual {worst:.3e})", residual=worst)
    return freeze(m)


def z2_flip_signs(names: Sequence[str], catalog: Optional[Mapping[str, CatalogEntry]] = None) -> Dict[str, float]:
    """<psi| X⊗4 |psi> for each named state; ±1 marks a Z2 eigenstate."""
    out = {}
    for name in names:
        psi = named_state(name, catalog)
        out[name] = float(np.vdot(psi.amplitudes, flip_all(psi).amplitudes).real)
    return out


class UnitConfigurationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    e16_distance: float
    o1_distance: float
    passed: bool

    @property
    def distance(self) -> float:
        return max(self.e16_distance, self.o1_distance)


def unit_configuration_check(
    catalog: Optional[Mapping[str, CatalogEntry]] = None, tol: float = CATALOG_TOL
) -> UnitConfigurationReport:
    """
    Rebuild o1 and e16 from the unit configurations
    A = |⇑⇑> + 2|○●> + 2|●○> + |⇓⇓> and B = 5|○○> + 5|●●>:
    o1 ∝ A - B and e16 ∝ X3 X4 A - e^{iπ} X3 X4 B.
    """
    a = np.zeros(DIM, dtype=complex)
    for config, weight in (("⇑⇑", 1), ("○●", 2), ("●○", 2), ("⇓⇓", 1)):
        a[configuration_index(config)] = weight
    b = np.zeros(DIM, dtype=complex)
    for config, weight in (("○○", 5), ("●●", 5)):
        b[configuration_index(config)] = weight
    x34 = compile_pauli(PauliString.parse("x3 x4"))
    rebuilt = {
        "o1": a - b,
        "e16": x34 @ a - np.exp(1j * np.pi) * (x34 @ b),
    }
    distances = {}
    for name, amps in rebuilt.items():
        target = named_state(name, catalog).amplitudes
        distances[name] = float(np.linalg.norm(amps / np.linalg.norm(amps) - target))
    return UnitConfigurationReport(
        e16_distance=distances["e16"],
        o1_distance=distances["o1"],
        passed=max(distances.values()) < tol,
    )
