import math
import os
import uuid
from typing import Any, Callable, Dict, List, Mapping, Optional

import numpy as np
from colorama import Fore
from pydantic import BaseModel, Field

from src.constants import DIM
from src.entanglement import concurrence_operator_check, concurrence_tau, partial_trace, von_neumann_entropy
from src.exceptions import TriangularStarError
from src.fermionization import (
    bond_identities,
    canonical_relations,
    clifford_check,
    complex_fermion_hamiltonian,
    complex_fermions,
    fermionic_plaquettes,
    fermionized_hamiltonian,
    sector_energies,
    sector_union,
)
from src.model import (
    GROUND_NAMES,
    ZERO_NAMES,
    CatalogEntry,
    Couplings,
    FourSpinState,
    GaugeSector,
    build_hamiltonian,
    named_state,
    named_states,
    projector_distances,
    unit_configuration_check,
    validate_catalog,
    verify_conserved,
    z2_flip_signs,
)
from src.model.hamiltonian import spectrum_agreement
from src.oplin import frobenius
from src.pipeline.utils import load_config, pipeline_logger
from src.statistics import (
    PLAQUETTE_STATE_ORDER,
    Permutation,
    braid_loop,
    chi_decomposition_check,
    exchange_loop,
    excited_pair_relation,
    phase_map,
    subspace_statistics,
)
from utils.ml_logging import log_function_call

# Pair swap on the ground basis g1..g4 in row convention
GROUND_PAIR_SWAP = np.array([[0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]], dtype=complex)
# e11 -> e11, e12 <-> e13, e14 -> -e14
FIRST_EXCITED_PAIR_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]], dtype=complex)
# (-i, -i, 1, 1, i, i, 1, 1) over PLAQUETTE_STATE_ORDER
PLAQUETTE_SWAP_PHASES = (-1j, -1j, 1, 1, 1j, 1j, 1, 1)


class CheckResult(BaseModel):
    name: str
    passed: bool
    residual: float
    threshold: float
    failing: List[str] = Field(default_factory=list)
    detail: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    run_id: str
    couplings: Couplings
    passed: bool
    checks: Dict[str, CheckResult]

    @property
    def failing_checks(self) -> List[str]:
        return [name for name, check in self.checks.items() if not check.passed]


class VerificationPipeline:
    """
    Runs every invariant suite of the model and collects per-check residuals.

    Checks that depend on the state catalog run at the headline parameter point
    (Jy = Jz = Jp = 2Jx) with the configured Jx, since the catalog lists
    eigenstates of that point only.
    """

    def __init__(
        self,
        config_file: str = os.path.join("verification", "settings.yaml"),
        couplings: Optional[Couplings] = None,
        catalog: Optional[Mapping[str, CatalogEntry]] = None,
        tol: Optional[float] = None,
        run_id: Optional[str] = None,
    ) -> None:
        self.config = load_config(config_file)
        self.logger = pipeline_logger(self.config, "verification")
        self.run_id = run_id or uuid.uuid4().hex[:8]
        self.couplings = couplings or Couplings.headline()
        self.catalog = catalog
        self.tol_override = tol
        self.tolerances = {
            "identity": 1e-12,
            "eigen": 1e-9,
            "catalog": 1e-10,
            "projector": 1e-8,
            **self.config.get("tolerances", {}),
        }
        self.check_names: List[str] = self.config.get("checks") or list(self._registry())
        draws = self.config.get("random_draws", {})
        self.random_couplings = self._draw_couplings(
            count=int(draws.get("count", 20)),
            seed=int(draws.get("seed", 0)),
            low=float(draws.get("low", -3.0)),
            high=float(draws.get("high", 3.0)),
        )

    @property
    def catalog_couplings(self) -> Couplings:
        jx = self.couplings.jx
        if jx != 0 and self.couplings == Couplings.headline(jx):
            return self.couplings
        return Couplings.headline()

    def _threshold(self, key: str) -> float:
        return float(self.tol_override if self.tol_override is not None else self.tolerances[key])

    @staticmethod
    def _draw_couplings(count: int, seed: int, low: float, high: float) -> List[Couplings]:
        rng = np.random.default_rng(seed)
        return [Couplings(**dict(zip(("jx", "jy", "jz", "jp"), rng.uniform(low, high, 4)))) for _ in range(count)]

    def _registry(self) -> Dict[str, Callable[[], CheckResult]]:
        return {
            "conservation": self.check_conservation,
            "spectrum": self.check_spectrum,
            "catalog": self.check_catalog,
            "projectors": self.check_projectors,
            "unit_configurations": self.check_unit_configurations,
            "statistics": self.check_statistics,
            "phase_maps": self.check_phase_maps,
            "braid_loop": self.check_braid_loop,
            "z2_flips": self.check_z2_flips,
            "majorana": self.check_majorana,
            "fermionized": self.check_fermionized,
            "bonds": self.check_bonds,
            "plaquettes": self.check_plaquettes,
            "sectors": self.check_sectors,
            "concurrence": self.check_concurrence,
            "entropy": self.check_entropy,
        }

    def _result(self, name: str, residuals: Dict[str, float], key: str, **detail: Any) -> CheckResult:
        threshold = self._threshold(key)
        failing = sorted(k for k, r in residuals.items() if not r < threshold)
        worst = max(residuals.values()) if residuals else 0.0
        return CheckResult(
            name=name,
            passed=not failing,
            residual=worst,
            threshold=threshold,
            failing=failing,
            detail={"residuals": residuals, **detail},
        )

    def check_conservation(self) -> CheckResult:
        residuals = {}
        for i, c in enumerate([self.couplings] + self.random_couplings):
            residuals["config" if i == 0 else f"draw{i}"] = verify_conserved(c).max_norm
        return self._result("conservation", residuals, "identity")

    def check_spectrum(self) -> CheckResult:
        residuals = {}
        for i, c in enumerate([self.couplings] + self.random_couplings):
            residuals["config" if i == 0 else f"draw{i}"] = spectrum_agreement(c)
        return self._result("spectrum", residuals, "eigen")

    def check_catalog(self) -> CheckResult:
        checks = validate_catalog(self.catalog_couplings, self.catalog, self._threshold("catalog"))
        residuals = {}
        for check in checks:
            energy_error = abs(check.rayleigh_energy - check.expected_energy)
            residuals[check.name] = max(check.residual, energy_error) if math.isfinite(energy_error) else math.inf
        return self._result("catalog", residuals, "catalog")

    def check_projectors(self) -> CheckResult:
        distances = projector_distances(self.catalog_couplings, self.catalog)
        return self._result("projectors", {f"E={k:g}": v for k, v in distances.items()}, "projector")

    def check_unit_configurations(self) -> CheckResult:
        report = unit_configuration_check(self.catalog)
        return self._result(
            "unit_configurations", {"o1": report.o1_distance, "e16": report.e16_distance}, "catalog"
        )

    def check_statistics(self) -> CheckResult:
        pair = Permutation.pair_swap()
        targets = {
            "g1-g4": (GROUND_NAMES, GROUND_PAIR_SWAP),
            "g1,g3": (("g1", "g3"), np.array([[0, 1], [1, 0]], dtype=complex)),
            "g2,g4": (("g2", "g4"), np.array([[-1, 0], [0, 1]], dtype=complex)),
            "e9,e10": (("e9", "e10"), -np.eye(2)),
            "e11-e14": (("e11", "e12", "e13", "e14"), FIRST_EXCITED_PAIR_SWAP),
            "o1-o4": (ZERO_NAMES, np.eye(4)),
            "e15,e16": (("e15", "e16"), np.eye(2)),
        }
        residuals: Dict[str, float] = {}
        classes: Dict[str, str] = {}
        for label, (names, expected) in targets.items():
            stats = subspace_statistics(named_states(names, self.catalog), pair, allow_oblique=True)
            residuals[label] = float(np.max(np.abs(stats.eta - expected)))
            classes[label] = stats.classification.value
        residuals["P e9 = -X3X4 e10"] = excited_pair_relation(self.catalog)
        chi = chi_decomposition_check(self.catalog)
        residuals["chi00 split"] = max(
            chi.symmetric_distance,
            chi.antisymmetric_distance,
            chi.symmetric_parity,
            chi.antisymmetric_parity,
            chi.resolution_error,
        )
        return self._result("statistics", residuals, "catalog", classes=classes)

    def check_phase_maps(self) -> CheckResult:
        swap = Permutation.plaquette_swap(1, 2)
        plus_b = phase_map(named_state("S+B", self.catalog), swap)
        worst_b = 0.0
        for k, ratio in plus_b.entries.items():
            z1 = 1 - 2 * ((k >> 3) & 1)
            z2 = 1 - 2 * ((k >> 2) & 1)
            worst_b = max(worst_b, abs(ratio - 1j * z1 * z2))
        plus_a = phase_map(named_state("S+A", self.catalog), swap)
        ratios = plus_a.ratios_in(PLAQUETTE_STATE_ORDER)
        worst_a = max(abs(r - e) for r, e in zip(ratios, PLAQUETTE_SWAP_PHASES))
        return self._result("phase_maps", {"S+B": worst_b, "S+A": worst_a}, "catalog", s_plus_a=ratios)

    def check_braid_loop(self) -> CheckResult:
        residual = frobenius(braid_loop(exchange_loop()) - np.eye(DIM))
        return self._result("braid_loop", {"loop": residual}, "identity")

    def check_z2_flips(self) -> CheckResult:
        expected = {name: -1.0 for name in GROUND_NAMES}
        expected.update({name: 1.0 for name in ZERO_NAMES + ("e15", "e16")})
        signs = z2_flip_signs(list(expected), self.catalog)
        residuals = {name: abs(signs[name] - expected[name]) for name in expected}
        return self._result("z2_flips", residuals, "catalog", signs=signs)

    def check_majorana(self) -> CheckResult:
        report = clifford_check()
        residuals = {**report.square_errors, **report.anticommutators}
        return self._result("majorana", residuals, "identity")

    def check_fermionized(self) -> CheckResult:
        residuals: Dict[str, float] = {}
        for i, c in enumerate([self.couplings] + self.random_couplings):
            tag = "config" if i == 0 else f"draw{i}"
            h = build_hamiltonian(c)
            residuals[f"majorana:{tag}"] = frobenius(fermionized_hamiltonian(c) - h)
            residuals[f"complex:{tag}"] = frobenius(complex_fermion_hamiltonian(c) - h)
        residuals.update(canonical_relations(complex_fermions(self.couplings)))
        return self._result("fermionized", residuals, "identity")

    def check_bonds(self) -> CheckResult:
        report = bond_identities(self.couplings)
        return self._result("bonds", report.holds, "identity", printed_failures=report.printed_failures)

    def check_plaquettes(self) -> CheckResult:
        report = fermionic_plaquettes()
        residuals = {}
        for row in report.plaquettes:
            residuals[f"S{row.index}"] = row.distance
            residuals[f"S{row.index}^2"] = row.square_error
        residuals["S1S2S3 vs S4"] = 0.0 if report.triple_consistent else 1.0
        return self._result("plaquettes", residuals, "identity", scalars=report.scalars)

    def check_sectors(self) -> CheckResult:
        residuals: Dict[str, float] = {}
        for i, c in enumerate([self.couplings] + self.random_couplings):
            tag = "config" if i == 0 else f"draw{i}"
            union = sector_union(c)
            residuals[f"blocks:{tag}"] = union.distance
            residuals[f"closed_form:{tag}"] = union.closed_form_distance
            for signs in ((1, 1, 1), (-1, -1, -1)):
                s = GaugeSector(s1=signs[0], s2=signs[1], s3=signs[2])
                inside = sector_energies(s, c, self._threshold("eigen")).all_in_spectrum
                residuals[f"homogeneous{signs}:{tag}"] = 0.0 if inside else 1.0
        return self._result("sectors", residuals, "eigen")

    def check_concurrence(self) -> CheckResult:
        report = concurrence_operator_check(self.catalog)
        residuals = dict(report.identities)
        residuals["tau action off-diagonal"] = report.tau_off_diagonal
        residuals["tau(GHZ)=1"] = abs(concurrence_tau(named_state("GHZ", self.catalog)) - 1.0)
        residuals["tau(up4)=0"] = concurrence_tau(FourSpinState.configuration("⇑⇑"))
        return self._result(
            "concurrence",
            residuals,
            "identity",
            tau_action=report.tau_action,
            printed_matches_tau=report.printed_matches_tau,
            printed_matches_z_string=report.printed_matches_z_string,
        )

    def check_entropy(self) -> CheckResult:
        state = named_state("S+B", self.catalog)
        marginal = von_neumann_entropy(partial_trace(state, (2, 3, 4)))
        complement = von_neumann_entropy(partial_trace(state, (1,)))
        residuals = {"S+B{2,3,4}": abs(marginal - math.log(2)), "complementarity": abs(marginal - complement)}
        return self._result("entropy", residuals, "catalog", entropy_nats=marginal)

    @log_function_call("verification")
    def run(self) -> VerificationReport:
        registry = self._registry()
        results: Dict[str, CheckResult] = {}
        self.logger.info(Fore.CYAN + f"Verification run {self.run_id} at {self.couplings}")
        for name in self.check_names:
            if name not in registry:
                self.logger.warning(f"Unknown check {name!r} in settings, skipped")
                continue
            try:
                result = registry[name]()
            except TriangularStarError as e:
                self.logger.error(f"Check {name} raised {type(e).__name__}: {e.detail}")
                result = CheckResult(
                    name=name,
                    passed=False,
                    residual=math.inf,
                    threshold=0.0,
                    failing=[type(e).__name__],
                    detail=e.to_report(),
                )
            colour = Fore.GREEN if result.passed else Fore.RED
            self.logger.info(colour + f"{name}: {'pass' if result.passed else 'FAIL'} (max residual {result.residual:.3e})")
            results[name] = result
        passed = all(r.passed for r in results.values())
        self.logger.keyinfo(f"Verification run {self.run_id}: {'all checks passed' if passed else 'failures'}")
        return VerificationReport(run_id=self.run_id, couplings=self.couplings, passed=passed, checks=results)
