"""Subcommand handlers. Each returns an exit code and a JSON payload or a table."""

from typing import Any, Dict, List, Optional, Tuple, Union

import pandas as pd

from src.cli.config import RunConfig
from src.constants import IDENTITY_TOL
from src.entanglement import (
    partial_trace,
    printed_eigenvalue_magnitudes,
    unnormalized_entropy_magnitude,
    von_neumann_entropy,
)
from src.exceptions import BadIndex, UsageError
from src.fermionization import (
    bond_identities,
    clifford_check,
    complex_fermion_hamiltonian,
    fermionic_plaquettes,
    fermionic_terms,
    fermionized_hamiltonian,
    sector_table,
    sector_union,
)
from src.model import (
    analytic_levels,
    build_hamiltonian,
    index_symbols,
    load_catalog,
    named_state,
    named_states,
    numerical_levels,
)
from src.model.hamiltonian import spectrum_agreement
from src.oplin import frobenius, matrix_to_json
from src.pipeline.sweep import SpectrumSweep
from src.pipeline.verification import VerificationPipeline
from src.statistics import Permutation, exchange_report, phase_map

Payload = Union[Dict[str, Any], pd.DataFrame]

# Marginal for which a printed reduced density exists
PRINTED_MARGINAL = ("S+B", (2, 3, 4))


def _catalog(config: RunConfig):
    return load_catalog(config.catalog_file) if config.catalog_file else None


def parse_names(text: str) -> List[str]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise UsageError(f"No state names in {text!r}")
    return names


def parse_perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except BadIndex as e:
        raise UsageError(e.detail) from e


def parse_sites(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError as e:
        raise UsageError(f"Sites must be comma-separated integers, got {text!r}") from e


def cmd_spectrum(config: RunConfig) -> Tuple[int, Payload]:
    c = config.couplings
    tol = config.tolerances
    analytic = analytic_levels(c, tol.level)
    unit = c.energy_unit
    rows = []
    for energy, multiplicity in numerical_levels(c, tol.level):
        labels = [e.label for e in analytic.entries if abs(e.energy - energy) < tol.level]
        # Jx units whenever Jx != 0
        rows.append({"energy": energy / unit, "multiplicity": multiplicity, "label": "|".join(labels)})
    distance = spectrum_agreement(c, tol.eigen)
    agree = distance < tol.eigen
    code = 0 if agree else 2
    if config.output_format.is_tabular:
        return code, pd.DataFrame(rows, columns=["energy", "multiplicity", "label"])
    return code, {"couplings": c, "levels": rows, "agree": agree, "distance": distance}


def cmd_verify(config: RunConfig, tol: Optional[float] = None) -> Tuple[int, Payload]:
    pipeline = VerificationPipeline(
        couplings=config.couplings, catalog=_catalog(config), tol=tol, run_id="cli"
    )
    report = pipeline.run()
    payload = {
        "passed": report.passed,
        "failing": report.failing_checks,
        "couplings": report.couplings,
        "checks": report.checks,
    }
    return (0 if report.passed else 2), payload


def cmd_stats(config: RunConfig, basis: str, perm: str, strict: bool = False) -> Tuple[int, Payload]:
    names = parse_names(basis)
    p = parse_perm(perm)
    states = named_states(names, _catalog(config))
    report = exchange_report(states, p, allow_oblique=not strict)
    return 0, {
        "basis": names,
        "perm": p.name,
        "mapping": list(p.mapping),
        "closed": report.closed,
        "eta": matrix_to_json(report.eta) if report.eta is not None else None,
        "class": report.classification,
        "oblique": report.oblique,
        "residual": report.residual,
    }


def cmd_phase(config: RunConfig, state: str, perm: str) -> Tuple[int, Payload]:
    p = parse_perm(perm)
    psi = named_state(state, _catalog(config))
    pm = phase_map(psi, p)
    rows = [
        {"index": k, "configuration": index_symbols(k), "ratio": ratio}
        for k, ratio in sorted(pm.entries.items())
    ]
    return 0, {"state": state, "perm": p.name, "ratios": rows, "constant": pm.is_constant()}


def cmd_jw(config: RunConfig) -> Tuple[int, Payload]:
    c = config.couplings
    tol = config.tolerances
    h = build_hamiltonian(c)
    clifford = clifford_check(tol=IDENTITY_TOL)
    bonds = bond_identities(c, tol=tol.identity)
    plaquettes = fermionic_plaquettes()
    union = sector_union(c)
    h_distance = frobenius(fermionized_hamiltonian(c) - h)
    complex_distance = frobenius(complex_fermion_hamiltonian(c) - h)
    payload = {
        "clifford_ok": clifford.passed,
        "h_distance": h_distance,
        "complex_h_distance": complex_distance,
        "bond_ok": bonds.passed,
        "bond_printed_failures": bonds.printed_failures,
        "plaquette_scalars": plaquettes.scalars,
        "term_scalars": {t.label: t.scalar for t in fermionic_terms()},
        "sector_table": sector_table(c, tol.eigen),
        "sector_union_distance": union.distance,
    }
    ok = (
        clifford.passed
        and bonds.passed
        and max(h_distance, complex_distance) < tol.identity
        and union.passed(tol.eigen)
    )
    return (0 if ok else 2), payload


def cmd_entropy(config: RunConfig, state: str, keep: str) -> Tuple[int, Payload]:
    sites = parse_sites(keep)
    psi = named_state(state, _catalog(config))
    rho = partial_trace(psi, sites)
    nats = von_neumann_entropy(rho, base="e")
    bits = von_neumann_entropy(rho, base="2")
    printed = (state, rho.subsystem) == PRINTED_MARGINAL
    return 0, {
        "state": state,
        "keep": list(rho.subsystem),
        "eigenvalues": rho.eigenvalues(),
        "entropy_nats": nats,
        "entropy_bits": bits,
        "paper_convention_magnitude": unnormalized_entropy_magnitude() if printed else None,
        "printed_eigenvalue_magnitudes": printed_eigenvalue_magnitudes() if printed else None,
    }


def cmd_sweep(config: RunConfig, param: str, start: float, stop: float, steps: int) -> Tuple[int, Payload]:
    df = SpectrumSweep(couplings=config.couplings, run_id="cli").run(param, start, stop, steps)
    if not config.output_format.is_tabular:
        return 0, {"param": param, "rows": df.to_dict(orient="records")}
    return 0, df
