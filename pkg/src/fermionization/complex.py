"""Complex fermions c_a, c_b built from the b Majoranas, and the pairing form of H."""

from typing import Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.constants import DIM, IDENTITY_TOL
from src.fermionization.majorana import MajoranaSet, bond_operators, majorana_set
from src.model import Couplings, plaquette, plaquette_products
from src.oplin import ComplexMatrix, anticommutator, freeze, frobenius


class ComplexFermionSet(BaseModel):
    """c_a = (b1 + i b3)/2, c_b = (b2 - i b4)/2, their adjoints, and the gap operators."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    c_a: np.ndarray
    c_a_dag: np.ndarray
    c_b: np.ndarray
    c_b_dag: np.ndarray
    delta: np.ndarray
    delta_conj: np.ndarray
    t: np.ndarray
    t_conj: np.ndarray

    @property
    def n_a(self) -> ComplexMatrix:
        return self.c_a_dag @ self.c_a

    @property
    def n_b(self) -> ComplexMatrix:
        return self.c_b_dag @ self.c_b


def complex_fermions(c: Couplings, m: Optional[MajoranaSet] = None) -> ComplexFermionSet:
    """
    Build the fermion pair and the operator-valued pairing gap and hopping.

    The conjugate of an operator coefficient flips its explicit i only; the
    bond and plaquette operators in it are Hermitian and stay as they are.
    """
    m = m or majorana_set()
    bonds = bond_operators(m)
    b14, b23 = bonds.b14, bonds.b23
    k2 = plaquette(2) @ b23
    k3 = plaquette(3) @ b14
    c_a = (m.b[1] + 1j * m.b[3]) / 2
    c_b = (m.b[2] - 1j * m.b[4]) / 2
    z_part_delta = c.jz * (b14 - b23)
    y_part_delta = c.jy * (k2 - k3)
    z_part_t = c.jz * (b14 + b23)
    y_part_t = c.jy * (k2 + k3)
    return ComplexFermionSet(
        c_a=freeze(c_a),
        c_a_dag=freeze(c_a.conj().T),
        c_b=freeze(c_b),
        c_b_dag=freeze(c_b.conj().T),
        delta=freeze(z_part_delta + 1j * y_part_delta),
        delta_conj=freeze(z_part_delta - 1j * y_part_delta),
        t=freeze(z_part_t - 1j * y_part_t),
        t_conj=freeze(z_part_t + 1j * y_part_t),
    )


def complex_fermion_hamiltonian(c: Couplings) -> ComplexMatrix:
    """Jx(1 - 2n_b) + Jx S1S2 (1 - 2n_a) + pairing and hopping terms + Jp plaquette products."""
    f = complex_fermions(c)
    identity = np.eye(DIM)
    h = c.jx * (identity - 2 * f.n_b)
    h = h + c.jx * plaquette(1) @ plaquette(2) @ (identity - 2 * f.n_a)
    h = h + f.delta @ f.c_a @ f.c_b_dag
    h = h - f.delta_conj @ f.c_a_dag @ f.c_b
    h = h - f.t_conj @ f.c_a @ f.c_b
    h = h + f.t @ f.c_a_dag @ f.c_b_dag
    h = h + c.jp * plaquette_products()
    return freeze(h)


def canonical_relations(f: ComplexFermionSet) -> Dict[str, float]:
    """Residuals of {c, c+} = I, c^2 = 0 and the cross-species anticommutators."""
    identity = np.eye(DIM)
    return {
        "{c_a,c_a+}-I": frobenius(anticommutator(f.c_a, f.c_a_dag) - identity),
        "{c_b,c_b+}-I": frobenius(anticommutator(f.c_b, f.c_b_dag) - identity),
        "c_a^2": frobenius(f.c_a @ f.c_a),
        "c_b^2": frobenius(f.c_b @ f.c_b),
        "{c_a,c_b}": frobenius(anticommutator(f.c_a, f.c_b)),
        "{c_a,c_b+}": frobenius(anticommutator(f.c_a, f.c_b_dag)),
        "{c_a+,c_b}": frobenius(anticommutator(f.c_a_dag, f.c_b)),
        "{c_a+,c_b+}": frobenius(anticommutator(f.c_a_dag, f.c_b_dag)),
    }


def canonical_relations_hold(f: ComplexFermionSet, tol: float = IDENTITY_TOL) -> bool:
    return max(canonical_relations(f).values()) < tol
