"""Symbolic Pauli strings and their compilation to dense matrices."""

from typing import Any, Dict, Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.constants import N_SITES, Axis
from src.exceptions import BadIndex, DuplicateSite
from src.oplin.matrix import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ComplexMatrix,
    freeze,
    kron_all,
)

PAULI: Dict[Axis, ComplexMatrix] = {Axis.X: SIGMA_X, Axis.Y: SIGMA_Y, Axis.Z: SIGMA_Z}


class PauliString(BaseModel):
    """
    A scalar times a product of single-site Pauli factors.

    Sites are 1-based; site 1 is the leftmost tensor factor.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coefficient: complex = Field(default=1 + 0j, description="Scalar prefactor.")
    factors: Tuple[Tuple[int, Axis], ...] = Field(
        default=(), description="(site, axis) pairs, at most one per site."
    )
    n_sites: int = Field(default=N_SITES, ge=1, description="Number of sites.")

    @field_validator("coefficient", mode="before")
    @classmethod
    def _coerce_coefficient(cls, value: Any) -> complex:
        return complex(value)

    @field_validator("factors", mode="before")
    @classmethod
    def _coerce_factors(cls, value: Any) -> Tuple[Tuple[int, Axis], ...]:
        return tuple((int(site), Axis(axis)) for site, axis in value)

    @model_validator(mode="after")
    def _check_sites(self) -> "PauliString":
        seen = set()
        for site, _ in self.factors:
            if not 1 <= site <= self.n_sites:
                raise BadIndex(f"Site {site} outside 1..{self.n_sites}")
            if site in seen:
                raise DuplicateSite(f"Site {site} appears twice")
            seen.add(site)
        return self

    @classmethod
    def parse(cls, text: str, coefficient: complex = 1, n_sites: int = N_SITES) -> "PauliString":
        """Build from a compact form such as ``"z1 x2 y3"``."""
        factors = []
        for token in text.split():
            factors.append((int(token[1:]), Axis(token[0].lower())))
        return cls(coefficient=coefficient, factors=tuple(factors), n_sites=n_sites)

    def axis_at(self, site: int) -> Axis | None:
        for s, axis in self.factors:
            if s == site:
                return axis
        return None

    def compile(self) -> ComplexMatrix:
        return compile_pauli(self)

    def __str__(self) -> str:
        body = " ".join(f"{axis.value}{site}" for site, axis in self.factors) or "I"
        return f"({self.coefficient:g}) {body}"


def compile_pauli(ps: PauliString) -> ComplexMatrix:
    """Dense 2^n x 2^n matrix: coefficient times the tensor product, identity elsewhere."""
    by_site = dict(ps.factors)
    factors = [PAULI[by_site[site]] if site in by_site else IDENTITY_2 for site in range(1, ps.n_sites + 1)]
    return freeze(ps.coefficient * kron_all(factors))


def strings_commute(a: PauliString, b: PauliString) -> bool:
    """True iff the number of sites where both act with different axes is even."""
    clashes = 0
    for site, axis in a.factors:
        other = b.axis_at(site)
        if other is not None and other != axis:
            clashes += 1
    return clashes % 2 == 0


def pauli_product(strings: Iterable[PauliString]) -> ComplexMatrix:
    """Ordered matrix product of compiled strings (leftmost first)."""
    result = None
    for ps in strings:
        m = compile_pauli(ps)
        result = m if result is None else result @ m
    if result is None:
        raise BadIndex("Empty product")
    return freeze(result)
