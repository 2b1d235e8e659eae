"""Majorana operators from the inverse Jordan-Wigner map along the site order [1, 4, 2, 3]."""

from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.constants import DIM, IDENTITY_TOL
from src.exceptions import NoScalarMatch, UnsupportedOrdering
from src.oplin import ComplexMatrix, PauliString, anticommutator, compile_pauli, freeze, frobenius

DEFAULT_ORDER = (1, 4, 2, 3)

PSI_STRINGS: Dict[int, PauliString] = {
    1: PauliString.parse("y1"),
    4: PauliString.parse("x4 z1"),
    2: PauliString.parse("y2 z1 z4"),
    3: PauliString.parse("x3 z1 z4 z2"),
}
B_STRINGS: Dict[int, PauliString] = {
    1: PauliString.parse("x1", coefficient=-1),
    4: PauliString.parse("y4 z1", coefficient=-1),
    2: PauliString.parse("x2 z1 z4", coefficient=-1),
    3: PauliString.parse("y3 z1 z4 z2", coefficient=-1),
}


class SiteOrdering(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: Tuple[int, int, int, int] = DEFAULT_ORDER

    @field_validator("order")
    @classmethod
    def _bijection(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != [1, 2, 3, 4]:
            raise ValueError(f"{value} is not an ordering of sites 1..4")
        return value


class MajoranaSet(BaseModel):
    """psi[i] and b[i] keyed by site, i = 1..4."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ordering: SiteOrdering = Field(default_factory=SiteOrdering)
    psi: Dict[int, np.ndarray]
    b: Dict[int, np.ndarray]

    def operators(self) -> List[Tuple[str, np.ndarray]]:
        return [(f"psi{i}", self.psi[i]) for i in range(1, 5)] + [(f"b{i}", self.b[i]) for i in range(1, 5)]


class BondOperators(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    b14: np.ndarray
    b23: np.ndarray


def majorana_set(ordering: SiteOrdering = SiteOrdering()) -> MajoranaSet:
    if ordering.order != DEFAULT_ORDER:
        raise UnsupportedOrdering(f"Ordering {list(ordering.order)} is not supported")
    return _default_majoranas()


@lru_cache(maxsize=1)
def _default_majoranas() -> MajoranaSet:
    return MajoranaSet(
        psi={i: compile_pauli(ps) for i, ps in PSI_STRINGS.items()},
        b={i: compile_pauli(ps) for i, ps in B_STRINGS.items()},
    )


def bond_operators(m: MajoranaSet | None = None) -> BondOperators:
    """B14 = i psi1 psi4 and B23 = i psi2 psi3."""
    m = m or majorana_set()
    return BondOperators(b14=freeze(1j * m.psi[1] @ m.psi[4]), b23=freeze(1j * m.psi[2] @ m.psi[3]))


class CliffordReport(BaseModel):
    square_errors: Dict[str, float]
    anticommutators: Dict[str, float]
    tolerance: float = IDENTITY_TOL

    @property
    def passed(self) -> bool:
        worst = max(list(self.square_errors.values()) + list(self.anticommutators.values()))
        return worst < self.tolerance


def clifford_check(m: MajoranaSet | None = None, tol: float = IDENTITY_TOL) -> CliffordReport:
    """Eight squares against I and the 28 pairwise anticommutators, normalized {g_i, g_j} = 2 delta_ij."""
    m = m or majorana_set()
    ops = m.operators()
    identity = np.eye(DIM)
    squares = {name: frobenius(op @ op - identity) for name, op in ops}
    pairs = {}
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            pairs[f"{{{ops[i][0]},{ops[j][0]}}}"] = frobenius(anticommutator(ops[i][1], ops[j][1]))
    return CliffordReport(square_errors=squares, anticommutators=pairs, tolerance=tol)


def unit_scalar(a: ComplexMatrix, b: ComplexMatrix, tol: float = IDENTITY_TOL) -> complex:
    """
    The unit scalar s with a = s b.

    Raises:
        NoScalarMatch: If no unit-modulus s aligns the two operators.
    """
    denominator = np.vdot(b, b)
    if abs(denominator) == 0:
        raise NoScalarMatch("Reference operator is zero")
    s = complex(np.vdot(b, a) / denominator)
    if abs(abs(s) - 1.0) >= tol or frobenius(a - s * b) >= tol:
        raise NoScalarMatch(f"Best scalar {s:.6g} leaves distance {frobenius(a - s * b):.3e}")
    # snap rounding noise so reports read ±1, ±i
    return complex(round(s.real, 12), round(s.imag, 12))
