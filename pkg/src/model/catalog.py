"""Catalog of named eigenstates and reference states, with residual validation."""

import os
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.constants import CATALOG_TOL, DIM
from src.exceptions import CatalogError, UnknownName
from src.model.hamiltonian import build_hamiltonian, numerical_spectrum
from src.model.types import Couplings, FourSpinState, configuration_index
from src.oplin import ComplexMatrix, frobenius
from src.pipeline.utils import load_config
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.model")

BUILTIN_CATALOG_PATH = os.path.join(os.path.dirname(__file__), "catalog.yaml")

GROUND_NAMES = ("g1", "g2", "g3", "g4")
ZERO_NAMES = ("o1", "o2", "o3", "o4")

# Degenerate levels (in Jx units at the headline point) and the catalog states spanning them
LEVEL_SPANS: Tuple[Tuple[float, Tuple[str, ...]], ...] = (
    (-6.0, GROUND_NAMES),
    (-4.0, ("e9", "e10")),
    (0.0, ZERO_NAMES),
    (2.0, ("e11", "e12", "e13", "e14")),
    (12.0, ("e15", "e16")),
)

_ALIASES = {"S−A": "S-A", "S−B": "S-B", "χ00": "chi00", "ghz": "GHZ", "w": "W"}


class CatalogEntry(BaseModel):
    """A state written as relative amplitudes over double-spin configurations."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    energy: Optional[float] = Field(None, description="Eigenenergy in Jx units, or None.")
    terms: List[Tuple[str, complex]] = Field(default_factory=list)

    @field_validator("terms", mode="before")
    @classmethod
    def _parse_terms(cls, value: Any) -> List[Tuple[str, complex]]:
        parsed = []
        for item in value:
            config, coefficient = item
            parsed.append((str(config), complex(str(coefficient).replace(" ", ""))))
        return parsed

    def amplitudes(self) -> np.ndarray:
        amps = np.zeros(DIM, dtype=complex)
        for config, coefficient in self.terms:
            amps[configuration_index(config)] += coefficient
        return amps

    def state(self) -> FourSpinState:
        try:
            return FourSpinState.from_amplitudes(self.amplitudes(), label=self.name)
        except Exception as e:
            raise CatalogError(f"Catalog entry {self.name} cannot be normalized: {e}", state=self.name)


def load_catalog(path: Optional[str] = None) -> Mapping[str, CatalogEntry]:
    """
    Read a YAML state table. With ``path`` given, its entries override or extend
    the built-in table.
    """
    entries = dict(_builtin_catalog())
    if path is None:
        return MappingProxyType(entries)
    raw = load_config(os.path.abspath(path))
    if not raw:
        raise CatalogError(f"Catalog file {path} is missing, empty or invalid")
    for name, body in raw.items():
        entries[str(name)] = _entry_from_yaml(name, body, path)
        logger.info(f"Catalog override loaded for {name}")
    return MappingProxyType(entries)


@lru_cache(maxsize=1)
def _builtin_catalog() -> Mapping[str, CatalogEntry]:
    raw = load_config(BUILTIN_CATALOG_PATH)
    if not raw:
        raise CatalogError(f"Built-in catalog missing at {BUILTIN_CATALOG_PATH}")
    return MappingProxyType({str(n): _entry_from_yaml(n, body, BUILTIN_CATALOG_PATH) for n, body in raw.items()})


def _entry_from_yaml(name: Any, body: Any, path: str) -> CatalogEntry:
    if not isinstance(body, dict):
        raise CatalogError(
            f"Catalog entry {name} in {path} must be a mapping with energy and terms, got {type(body).__name__}",
            state=str(name),
        )
    try:
        return CatalogEntry(name=str(name), **body)
    except (TypeError, ValueError, ValidationError) as e:
        raise CatalogError(f"Catalog entry {name} in {path} is malformed: {e}", state=str(name)) from e


def catalog_names(catalog: Optional[Mapping[str, CatalogEntry]] = None) -> List[str]:
    return list((catalog or _builtin_catalog()).keys())


def named_state(name: str, catalog: Optional[Mapping[str, CatalogEntry]] = None) -> FourSpinState:
    """Normalized named state, e.g. ``named_state("g2")``."""
    table = catalog or _builtin_catalog()
    key = _ALIASES.get(name, name)
    if key not in table:
        raise UnknownName(f"Unknown state {name!r}; known: {', '.join(table)}", name=name)
    return table[key].state()


def named_states(names: Sequence[str], catalog: Optional[Mapping[str, CatalogEntry]] = None) -> List[FourSpinState]:
    return [named_state(n, catalog) for n in names]


def eigen_residual(state: FourSpinState, c: Couplings) -> Tuple[float, float]:
    """(<psi|H|psi>, ||(H - E) psi||)."""
    h = build_hamiltonian(c)
    psi = state.amplitudes
    h_psi = h @ psi
    energy = complex(np.vdot(psi, h_psi))
    residual = float(np.linalg.norm(h_psi - energy.real * psi))
    return float(energy.real), residual


class CatalogCheck(BaseModel):
    name: str
    expected_energy: Optional[float]
    rayleigh_energy: float
    residual: float
    passed: bool


def validate_catalog(
    c: Optional[Couplings] = None,
    catalog: Optional[Mapping[str, CatalogEntry]] = None,
    tol: float = CATALOG_TOL,
) -> List[CatalogCheck]:
    """Gate every entry with a documented energy through the eigen-residual check."""
    c = c or Couplings.headline()
    table = catalog or _builtin_catalog()
    checks = []
    for name, entry in table.items():
        if entry.energy is None:
            continue
        try:
            state = entry.state()
        except CatalogError as e:
            logger.error(str(e))
            checks.append(CatalogCheck(name=name, expected_energy=entry.energy, rayleigh_energy=float("nan"), residual=float("inf"), passed=False))
            continue
        energy, residual = eigen_residual(state, c)
        expected = entry.energy * c.energy_unit
        passed = residual < tol and abs(energy - expected) < tol
        if not passed:
            logger.error(f"Catalog state {name}: energy {energy:.12g} (expected {expected}), residual {residual:.3e}")
        checks.append(
            CatalogCheck(name=name, expected_energy=expected, rayleigh_energy=energy, residual=residual, passed=passed)
        )
    return checks


def span_projector(states: Sequence[FourSpinState]) -> ComplexMatrix:
    """Orthogonal projector onto the span of ``states`` (linearly independent)."""
    basis = np.column_stack([s.amplitudes for s in states])
    q, _ = np.linalg.qr(basis)
    return q @ q.conj().T


def eigenspace_projector(c: Couplings, energy: float, tol: float = 1e-6) -> ComplexMatrix:
    spectrum = numerical_spectrum(c)
    mask = np.abs(spectrum.eigenvalues - energy) < tol
    v = spectrum.eigenvectors[:, mask]
    return v @ v.conj().T


def projector_distances(
    c: Optional[Couplings] = None, catalog: Optional[Mapping[str, CatalogEntry]] = None
) -> Dict[float, float]:
    """Frobenius distance between each numerical eigenspace projector and its catalog span."""
    c = c or Couplings.headline()
    out = {}
    for level, names in LEVEL_SPANS:
        numeric = eigenspace_projector(c, level * c.energy_unit)
        span = span_projector(named_states(names, catalog))
        out[level] = frobenius(numeric - span)
    return out
