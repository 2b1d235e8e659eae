"""Statistical matrices of degenerate subspaces and per-configuration phase maps."""

from typing import Dict, List, Mapping, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.constants import CATALOG_TOL, IDENTITY_TOL, SUPPORT_EPS, ExchangeClass
from src.exceptions import NonUnimodularRatio, NotClosed, NotOrthonormal, NotUnitary, SupportMismatch
from src.model import (
    Couplings,
    FourSpinState,
    numerical_spectrum,
    named_state,
)
from src.model.catalog import CatalogEntry
from src.model.hamiltonian import build_hamiltonian
from src.model.types import configuration_index
from src.oplin import ComplexMatrix, PauliString, commutator, compile_pauli, freeze, frobenius, group_levels
from src.statistics.permutations import Permutation, permutation_matrix
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.statistics")


class StatisticalMatrix(BaseModel):
    """eta with P v_i = sum_j eta_ij v_j over a basis of a degenerate subspace."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eta: np.ndarray
    classification: ExchangeClass
    residual: float = Field(0.0, description="Largest ||P v_i - sum_j eta_ij v_j||.")
    oblique: bool = False


def classify(eta: ComplexMatrix, tol: float = CATALOG_TOL, metric: Optional[ComplexMatrix] = None) -> ExchangeClass:
    """
    boson iff eta = I, fermion iff eta = -I, exotic otherwise.

    Unitarity is checked as eta M eta^H = M, with M the identity unless a
    ``metric`` is given (G^T for an oblique basis with Gram matrix G).
    """
    eta = np.asarray(eta, dtype=complex)
    identity = np.eye(eta.shape[0])
    m = identity if metric is None else np.asarray(metric, dtype=complex)
    if frobenius(eta @ m @ eta.conj().T - m) >= tol:
        raise NotUnitary("Statistical matrix is not unitary")
    if frobenius(eta - identity) < tol:
        return ExchangeClass.BOSON
    if frobenius(eta + identity) < tol:
        return ExchangeClass.FERMION
    return ExchangeClass.EXOTIC


def subspace_statistics(
    basis: Sequence[FourSpinState],
    p: Permutation,
    *,
    allow_oblique: bool = False,
    tol: float = CATALOG_TOL,
) -> StatisticalMatrix:
    """
    Statistical matrix of ``p`` on the span of ``basis`` in row convention.

    An orthonormal basis gives eta_ij = <v_j|P v_i>. With ``allow_oblique`` a
    linearly independent basis is accepted: eta = (<v_j|P v_i>) (G^T)^{-1}, G the
    Gram matrix, and unitarity is checked in that metric (eta G^T eta^H = G^T).

    Raises:
        NotOrthonormal: Gram matrix differs from I (or is singular when oblique).
        NotClosed: Some P v_i leaves the span.
        NotUnitary: eta fails the unitarity check.
    """
    v = np.column_stack([s.amplitudes for s in basis])
    gram = v.conj().T @ v
    d = gram.shape[0]
    oblique = frobenius(gram - np.eye(d)) >= tol
    if oblique and not allow_oblique:
        raise NotOrthonormal(f"Gram matrix differs from I by {frobenius(gram - np.eye(d)):.3e}")
    if oblique and np.linalg.matrix_rank(gram, tol=tol) < d:
        raise NotOrthonormal("Basis states are linearly dependent")

    images = permutation_matrix(p) @ v
    # overlaps[i, j] = <v_j | P v_i>
    overlaps = (v.conj().T @ images).T
    eta = overlaps @ np.linalg.inv(gram.T) if oblique else overlaps
    leak = images - v @ eta.T
    residual = float(np.max(np.linalg.norm(leak, axis=0)))
    if residual >= tol:
        raise NotClosed(
            f"P[{p.name}] leaves the span (max residual {residual:.3e})",
            max_residual=residual,
            leak=freeze(leak),
        )
    try:
        eta_class = classify(eta, tol, metric=gram.T if oblique else None)
    except NotUnitary as e:
        raise NotUnitary(f"Statistical matrix for P[{p.name}] is not unitary") from e
    return StatisticalMatrix(eta=freeze(eta), classification=eta_class, residual=residual, oblique=oblique)



class ExchangeReport(BaseModel):
    """Outcome of a statistics run that may not close."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    basis: List[str]
    perm: str
    closed: bool
    residual: float
    eta: Optional[np.ndarray] = None
    classification: Optional[ExchangeClass] = None
    oblique: bool = False


def exchange_report(
    basis: Sequence[FourSpinState],
    p: Permutation,
    tol: float = CATALOG_TOL,
    *,
    allow_oblique: bool = True,
) -> ExchangeReport:
    """
    Like subspace_statistics, but an open span is reported (closed=False, no eta)
    instead of raised. NotOrthonormal and NotUnitary still propagate.
    """
    labels = [s.label or "?" for s in basis]
    try:
        stats = subspace_statistics(basis, p, allow_oblique=allow_oblique, tol=tol)
    except NotClosed as e:
        logger.info(f"P[{p.name}] on {labels}: not closed, residual {e.max_residual:.3e}")
        return ExchangeReport(basis=labels, perm=p.name, closed=False, residual=e.max_residual)
    return ExchangeReport(
        basis=labels,
        perm=p.name,
        closed=True,
        residual=stats.residual,
        eta=stats.eta,
        classification=stats.classification,
        oblique=stats.oblique,
    )


class PhaseMap(BaseModel):
    """Ratios (P psi)_k / psi_k on the support of psi."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: Dict[int, complex]

    def ratios_in(self, indices: Sequence[int]) -> List[complex]:
        return [self.entries[k] for k in indices]

    def is_constant(self, tol: float = CATALOG_TOL) -> bool:
        values = list(self.entries.values())
        return all(abs(v - values[0]) < tol for v in values)


def phase_map(state: FourSpinState, p: Permutation, eps: float = SUPPORT_EPS) -> PhaseMap:
    """
    Raises:
        SupportMismatch: P psi has weight outside the support of psi.
        NonUnimodularRatio: Some ratio has modulus away from 1.
    """
    psi = state.amplitudes
    phi = permutation_matrix(p) @ psi
    support = np.abs(psi) > eps
    outside = float(np.max(np.abs(phi[~support]))) if np.any(~support) else 0.0
    if outside > eps:
        raise SupportMismatch(f"P[{p.name}] moves weight {outside:.3e} off the support")
    entries: Dict[int, complex] = {}
    for k in np.flatnonzero(support):
        ratio = complex(phi[k] / psi[k])
        if abs(abs(ratio) - 1.0) > CATALOG_TOL:
            raise NonUnimodularRatio(f"|ratio| = {abs(ratio):.6g} at configuration {k}")
        entries[int(k)] = ratio
    return PhaseMap(entries=entries)


class ChiDecomposition(BaseModel):
    symmetric_distance: float
    antisymmetric_distance: float
    symmetric_parity: float
    antisymmetric_parity: float
    resolution_error: float
    passed: bool


def chi_decomposition_check(
    catalog: Optional[Mapping[str, CatalogEntry]] = None, tol: float = CATALOG_TOL
) -> ChiDecomposition:
    """
    Split chi00 with (I ± P[12;34])/2 and compare against
    chi1 = |⇓⇓> + |⇑⇑> + |○○> - |●●> + |○●> + |●○> and chi2 = |⇑⇓> - |⇓⇑>.
    """

    chi = named_state("chi00", catalog).amplitudes
    p = permutation_matrix(Permutation.pair_swap())
    identity = np.eye(p.shape[0])
    plus, minus = (identity + p) / 2, (identity - p) / 2

    chi1 = np.zeros_like(chi)
    for config, w in (("⇓⇓", 1), ("⇑⇑", 1), ("○○", 1), ("●●", -1), ("○●", 1), ("●○", 1)):
        chi1[configuration_index(config)] = w
    chi2 = np.zeros_like(chi)
    for config, w in (("⇑⇓", 1), ("⇓⇑", -1)):
        chi2[configuration_index(config)] = w
    # chi00 = (chi1 + chi2) / (2 sqrt 2)
    scale = 1 / (2 * np.sqrt(2))
    sym = float(np.linalg.norm(plus @ chi - scale * chi1))
    anti = float(np.linalg.norm(minus @ chi - scale * chi2))
    sym_parity = float(np.linalg.norm(p @ chi1 - chi1))
    anti_parity = float(np.linalg.norm(p @ chi2 + chi2))
    resolution = frobenius(plus + minus - identity)
    passed = max(sym, anti, sym_parity, anti_parity, resolution) < tol
    return ChiDecomposition(
        symmetric_distance=sym,
        antisymmetric_distance=anti,
        symmetric_parity=sym_parity,
        antisymmetric_parity=anti_parity,
        resolution_error=resolution,
        passed=passed,
    )


def excited_pair_relation(catalog: Optional[Mapping[str, CatalogEntry]] = None) -> float:
    """max of ||P e9 - e^{iπ} X3X4 e10|| and ||P e10 - e^{iπ} X3X4 e9||."""
    p = permutation_matrix(Permutation.pair_swap())
    x34 = compile_pauli(PauliString.parse("x3 x4", coefficient=np.exp(1j * np.pi)))
    e9 = named_state("e9", catalog).amplitudes
    e10 = named_state("e10", catalog).amplitudes
    return max(
        float(np.linalg.norm(p @ e9 - x34 @ e10)),
        float(np.linalg.norm(p @ e10 - x34 @ e9)),
    )


class ClosureCheck(BaseModel):
    perm: str
    commutator_norm: float
    commutes: bool
    closed_levels: List[float]
    open_levels: List[float]

    @property
    def consistent(self) -> bool:
        """Commuting swaps close on every level; the others leave at least one level."""
        return not self.open_levels if self.commutes else bool(self.open_levels)


def closure_check(p: Permutation, c: Optional[Couplings] = None, tol: float = IDENTITY_TOL) -> ClosureCheck:
    """Relate [P, H] = 0 to closure of every numerical eigenspace under P."""
    c = c or Couplings.headline()
    h = build_hamiltonian(c)
    pm = permutation_matrix(p)
    norm = frobenius(commutator(pm, h))
    spectrum = numerical_spectrum(c)
    closed, opened = [], []
    for energy, _ in group_levels(spectrum.eigenvalues):
        mask = np.abs(spectrum.eigenvalues - energy) < 1e-6
        v = spectrum.eigenvectors[:, mask]
        leak = pm @ v - v @ (v.conj().T @ pm @ v)
        (closed if frobenius(leak) < 1e-8 else opened).append(energy)
    return ClosureCheck(
        perm=p.name, commutator_norm=norm, commutes=norm < tol, closed_levels=closed, open_levels=opened
    )
