"""Domain records for the triangular-star model."""

import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.constants import DIM, IDENTITY_TOL, N_SITES, FrustrationClass
from src.exceptions import BadIndex, DimensionMismatch


class Couplings(BaseModel):
    """The four real couplings (Jx, Jy, Jz, Jp) of the Hamiltonian."""

    model_config = ConfigDict(frozen=True)

    jx: float = Field(1.0, description="x-bond coupling, also the reporting unit when nonzero.")
    jy: float = Field(2.0, description="y-bond coupling.")
    jz: float = Field(2.0, description="z-bond coupling.")
    jp: float = Field(2.0, description="Plaquette-product coupling.")

    @field_validator("jx", "jy", "jz", "jp")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("couplings must be finite")
        return float(value)

    @classmethod
    def headline(cls, jx: float = 1.0) -> "Couplings":
        """The parameter point Jy = Jz = Jp = 2Jx where four zero-energy states appear."""
        return cls(jx=jx, jy=2 * jx, jz=2 * jx, jp=2 * jx)

    @classmethod
    def zero(cls) -> "Couplings":
        return cls(jx=0.0, jy=0.0, jz=0.0, jp=0.0)

    @property
    def energy_unit(self) -> float:
        return self.jx if self.jx != 0 else 1.0

    def with_param(self, name: str, value: float) -> "Couplings":
        return self.model_copy(update={name: float(value)})


class DoubleSpinSymbol(BaseModel):
    """One of the four two-spin configurations ⇑ ⇓ ○ ●."""

    model_config = ConfigDict(frozen=True)

    symbol: str
    bits: Tuple[int, int]

    @property
    def arrows(self) -> str:
        return "".join("↑" if b == 0 else "↓" for b in self.bits)


DOUBLE_SPIN_SYMBOLS: Dict[str, DoubleSpinSymbol] = {
    "⇑": DoubleSpinSymbol(symbol="⇑", bits=(0, 0)),
    "⇓": DoubleSpinSymbol(symbol="⇓", bits=(1, 1)),
    "○": DoubleSpinSymbol(symbol="○", bits=(0, 1)),
    "●": DoubleSpinSymbol(symbol="●", bits=(1, 0)),
}
_ARROW_BITS = {"↑": 0, "↓": 1, "u": 0, "d": 1}


def configuration_index(text: str) -> int:
    """
    Basis index of a configuration written with double-spin symbols or arrows.

    ``"⇓●"``, ``"↓↓↓↑"`` and ``"dddu"`` all name index 14 (site 1 is the most
    significant bit, 0 = up).
    """
    bits: List[int] = []
    for ch in text.strip():
        if ch in DOUBLE_SPIN_SYMBOLS:
            bits.extend(DOUBLE_SPIN_SYMBOLS[ch].bits)
        elif ch in _ARROW_BITS:
            bits.append(_ARROW_BITS[ch])
        elif ch.isspace() or ch in "|⟩>":
            continue
        else:
            raise BadIndex(f"Unknown configuration symbol {ch!r} in {text!r}")
    if len(bits) != N_SITES:
        raise BadIndex(f"Configuration {text!r} does not name {N_SITES} spins")
    index = 0
    for b in bits:
        index = 2 * index + b
    return index


def index_arrows(index: int) -> str:
    if not 0 <= index < DIM:
        raise BadIndex(f"Basis index {index} outside 0..{DIM - 1}")
    return "".join("↓" if (index >> (N_SITES - 1 - k)) & 1 else "↑" for k in range(N_SITES))


def index_symbols(index: int) -> str:
    """Two double-spin symbols for pairs (1,2) and (3,4), e.g. 14 -> "⇓●"."""
    if not 0 <= index < DIM:
        raise BadIndex(f"Basis index {index} outside 0..{DIM - 1}")
    by_bits = {s.bits: s.symbol for s in DOUBLE_SPIN_SYMBOLS.values()}
    return by_bits[((index >> 3) & 1, (index >> 2) & 1)] + by_bits[((index >> 1) & 1, index & 1)]


class FourSpinState(BaseModel):
    """Normalized 16-amplitude state in the |s1 s2 s3 s4> basis."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    amplitudes: np.ndarray = Field(..., description="16 complex amplitudes, read-only.")
    label: Optional[str] = Field(None, description="Catalog name, if any.")

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _as_vector(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=complex).reshape(-1)
        if arr.shape != (DIM,):
            raise DimensionMismatch(f"Expected {DIM} amplitudes, got {arr.size}")
        arr.setflags(write=False)
        return arr

    @model_validator(mode="after")
    def _normalized(self) -> "FourSpinState":
        norm2 = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm2 - 1.0) >= IDENTITY_TOL:
            raise ValueError(f"state is not normalized: sum |a|^2 = {norm2!r}")
        return self

    @classmethod
    def from_amplitudes(cls, amplitudes: Any, label: Optional[str] = None) -> "FourSpinState":
        """Normalize ``amplitudes`` and wrap them."""
        arr = np.array(amplitudes, dtype=complex).reshape(-1)
        norm = np.linalg.norm(arr)
        if norm == 0:
            raise DimensionMismatch("Cannot normalize the zero vector")
        return cls(amplitudes=arr / norm, label=label)

    @classmethod
    def configuration(cls, text: str, label: Optional[str] = None) -> "FourSpinState":
        arr = np.zeros(DIM, dtype=complex)
        arr[configuration_index(text)] = 1.0
        return cls(amplitudes=arr, label=label or text)

    @property
    def vector(self) -> np.ndarray:
        return self.amplitudes

    def support(self, eps: float) -> List[int]:
        return [int(k) for k in np.flatnonzero(np.abs(self.amplitudes) > eps)]

    def overlap(self, other: "FourSpinState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_json(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "re": self.amplitudes.real.tolist(),
            "im": self.amplitudes.imag.tolist(),
        }


class GaugeSector(BaseModel):
    """Joint eigenvalues of the plaquette operators S1, S2, S3."""

    model_config = ConfigDict(frozen=True)

    s1: int
    s2: int
    s3: int

    @field_validator("s1", "s2", "s3")
    @classmethod
    def _ising(cls, value: int) -> int:
        if value not in (-1, 1):
            raise ValueError("plaquette eigenvalues are -1 or +1")
        return value

    @property
    def signs(self) -> Tuple[int, int, int]:
        return (self.s1, self.s2, self.s3)

    @property
    def frustration_sum(self) -> int:
        return self.s1 * self.s2 + self.s2 * self.s3 + self.s3 * self.s1

    @property
    def frustration_class(self) -> FrustrationClass:
        if self.s1 == self.s2 == self.s3:
            return FrustrationClass.FULLY_FRUSTRATED
        return FrustrationClass.MINIMALLY_FRUSTRATED

    @classmethod
    def all_sectors(cls) -> List["GaugeSector"]:
        return [
            cls(s1=a, s2=b, s3=c) for a in (1, -1) for b in (1, -1) for c in (1, -1)
        ]


class LevelEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    energy: float
    multiplicity: int = Field(..., ge=1)
    label: str = ""


class LevelTable(BaseModel):
    """Grouped energy levels; multiplicities sum to 16."""

    entries: List[LevelEntry]

    @model_validator(mode="after")
    def _full_count(self) -> "LevelTable":
        total = sum(e.multiplicity for e in self.entries)
        if total != DIM:
            raise ValueError(f"multiplicities sum to {total}, expected {DIM}")
        return self

    def expanded(self) -> List[float]:
        """Energies repeated by multiplicity, ascending."""
        out: List[float] = []
        for entry in self.entries:
            out.extend([entry.energy] * entry.multiplicity)
        return sorted(out)

    def as_pairs(self) -> List[Tuple[float, int]]:
        return [(e.energy, e.multiplicity) for e in self.entries]
