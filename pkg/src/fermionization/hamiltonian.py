"""Majorana form of the Hamiltonian, bond-operator identities and fermionic plaquettes."""

from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.constants import DIM, IDENTITY_TOL
from src.exceptions import NoScalarMatch
from src.fermionization.majorana import BondOperators, MajoranaSet, bond_operators, majorana_set, unit_scalar
from src.model import Couplings, build_hamiltonian, plaquette, plaquette_products
from src.oplin import ComplexMatrix, PauliString, commutator, compile_pauli, freeze, frobenius
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.fermionization")

# (coupling, printed coefficient, exact coefficient, spin bond)
TERM_TABLE: Tuple[Tuple[str, str, complex, complex, str], ...] = (
    ("i Jx b2 b4", "jx", 1j, 1j, "x2 x4"),
    ("i Jx [S1S2] b1 b3", "jx", 1j, -1j, "x1 x3"),
    ("-i Jy [S2 B23] b3 b4", "jy", -1j, -1j, "y3 y4"),
    ("-i Jy [S3 B14] b1 b2", "jy", -1j, -1j, "y1 y2"),
    ("i Jz B14 b1 b4", "jz", 1j, 1j, "z1 z4"),
    ("i Jz B23 b2 b3", "jz", 1j, 1j, "z2 z3"),
)


def _term_operators(m: MajoranaSet, bonds: BondOperators) -> List[ComplexMatrix]:
    s1, s2, s3 = plaquette(1), plaquette(2), plaquette(3)
    b = m.b
    return [
        b[2] @ b[4],
        s1 @ s2 @ b[1] @ b[3],
        s2 @ bonds.b23 @ b[3] @ b[4],
        s3 @ bonds.b14 @ b[1] @ b[2],
        bonds.b14 @ b[1] @ b[4],
        bonds.b23 @ b[2] @ b[3],
    ]


def fermionized_hamiltonian(c: Couplings) -> ComplexMatrix:
    """Six Majorana bilinears dressed by gauge operators plus the Jp plaquette products."""
    m = majorana_set()
    bonds = bond_operators(m)
    h = np.zeros((DIM, DIM), dtype=complex)
    for (_, coupling, _, exact, _), op in zip(TERM_TABLE, _term_operators(m, bonds)):
        h += getattr(c, coupling) * exact * op
    h += c.jp * plaquette_products()
    return freeze(h)


class FermionicTerm(BaseModel):
    label: str
    coupling: str
    spin_bond: str
    printed_coefficient: complex
    scalar: complex
    exact: bool


def fermionic_terms(tol: float = IDENTITY_TOL) -> List[FermionicTerm]:
    """
    Compare each printed Majorana term with the spin bond it stands for.

    scalar is the unit s with printed term = s * spin bond, so 1 marks a term that
    is right as written and -1 a term whose sign has to flip.
    """
    m = majorana_set()
    report = []
    for (label, coupling, printed, _, bond), op in zip(TERM_TABLE, _term_operators(m, bond_operators(m))):
        s = unit_scalar(printed * op, compile_pauli(PauliString.parse(bond)), tol)
        report.append(
            FermionicTerm(
                label=label,
                coupling=coupling,
                spin_bond=bond,
                printed_coefficient=printed,
                scalar=s,
                exact=abs(s - 1) < tol,
            )
        )
    return report


class BondIdentityReport(BaseModel):
    printed: Dict[str, float]
    holds: Dict[str, float]
    tolerance: float = IDENTITY_TOL

    @property
    def passed(self) -> bool:
        return max(self.holds.values()) < self.tolerance

    @property
    def printed_failures(self) -> List[str]:
        return sorted(name for name, r in self.printed.items() if r >= self.tolerance)


def bond_identities(c: Optional[Couplings] = None, tol: float = IDENTITY_TOL) -> BondIdentityReport:
    """
    Residuals of the bond-operator relations.

    printed holds the relations as usually quoted: both bonds conserved and
    S1S3 = S2S4 = -B14 B23 everywhere. holds carries the versions that are exact:
    conservation once Jy vanishes, B14 B23 = S2S3, and the S1S3 relation on the
    S1S2 = -1 subspace.
    """
    c = c or Couplings()
    bonds = bond_operators()
    b14, b23 = bonds.b14, bonds.b23
    h = build_hamiltonian(c)
    h_no_y = build_hamiltonian(c.with_param("jy", 0.0))
    s1, s2, s3, s4 = (plaquette(k) for k in range(1, 5))
    product = b14 @ b23
    identity = np.eye(DIM)
    odd = (identity - s1 @ s2) / 2

    printed = {
        "[B14,H]": frobenius(commutator(b14, h)),
        "[B23,H]": frobenius(commutator(b23, h)),
        "[B14,B23]": frobenius(commutator(b14, b23)),
        "S1S3+B14B23": frobenius(s1 @ s3 + product),
        "S2S4+B14B23": frobenius(s2 @ s4 + product),
    }
    holds = {
        "[B14,B23]": printed["[B14,B23]"],
        "B14^2-I": frobenius(b14 @ b14 - identity),
        "B23^2-I": frobenius(b23 @ b23 - identity),
        "B14B23-S2S3": frobenius(product - s2 @ s3),
        "[B14B23,H]": frobenius(commutator(product, h)),
        "[B14,H(jy=0)]": frobenius(commutator(b14, h_no_y)),
        "[B23,H(jy=0)]": frobenius(commutator(b23, h_no_y)),
        "odd(S1S3+B14B23)": frobenius(odd @ (s1 @ s3 + product)),
        "odd(S2S4+B14B23)": frobenius(odd @ (s2 @ s4 + product)),
    }
    report = BondIdentityReport(printed=printed, holds=holds, tolerance=tol)
    if report.printed_failures:
        logger.debug(f"Printed bond relations off: {report.printed_failures}")
    return report


class PlaquetteComparison(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    index: int
    scalar: complex
    distance: float
    square_error: float


class FermionicPlaquetteReport(BaseModel):
    plaquettes: List[PlaquetteComparison]
    triple_product_scalar: complex
    spin_triple_product_scalar: complex

    @property
    def scalars(self) -> List[complex]:
        return [p.scalar for p in self.plaquettes]

    @property
    def triple_consistent(self) -> bool:
        """F1 F2 F3 against F4 agrees with S1 S2 S3 against S4 once the scalars are divided out."""
        s = self.scalars
        expected = self.spin_triple_product_scalar * s[0] * s[1] * s[2] / s[3]
        return abs(self.triple_product_scalar - expected) < 1e-9


def fermionic_plaquette_operators(m: Optional[MajoranaSet] = None) -> Dict[int, ComplexMatrix]:
    m = m or majorana_set()
    psi, b = m.psi, m.b
    return {
        1: freeze(b[1] @ psi[1] @ psi[2] @ b[3]),
        2: freeze(psi[4] @ b[4] @ b[2] @ psi[3]),
        3: freeze(psi[1] @ psi[2] @ b[2] @ b[4]),
        4: freeze(b[1] @ psi[3] @ b[3] @ psi[4]),
    }


def fermionic_plaquettes(tol: float = IDENTITY_TOL) -> FermionicPlaquetteReport:
    """
    Align each Majorana plaquette with its spin string.

    Raises:
        NoScalarMatch: If some plaquette is not a unit multiple of its spin string.
    """
    fermionic = fermionic_plaquette_operators()
    identity = np.eye(DIM)
    rows = []
    for k, f in fermionic.items():
        spin = plaquette(k)
        s = unit_scalar(f, spin, tol)
        rows.append(
            PlaquetteComparison(
                index=k,
                scalar=s,
                distance=frobenius(f - s * spin),
                square_error=frobenius(f @ f - identity),
            )
        )
    try:
        triple = unit_scalar(fermionic[1] @ fermionic[2] @ fermionic[3], fermionic[4], tol)
        spin_triple = unit_scalar(plaquette(1) @ plaquette(2) @ plaquette(3), plaquette(4), tol)
    except NoScalarMatch:
        logger.error("Triple plaquette product is not proportional to the fourth plaquette")
        raise
    return FermionicPlaquetteReport(plaquettes=rows, triple_product_scalar=triple, spin_triple_product_scalar=spin_triple)
