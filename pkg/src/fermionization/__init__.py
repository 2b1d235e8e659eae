from src.fermionization.complex import (
    ComplexFermionSet,
    canonical_relations,
    canonical_relations_hold,
    complex_fermion_hamiltonian,
    complex_fermions,
)
from src.fermionization.gauge import (
    SectorEnergies,
    SectorUnion,
    sector_basis,
    sector_energies,
    sector_levels,
    sector_spectrum,
    sector_table,
    sector_union,
)
from src.fermionization.hamiltonian import (
    BondIdentityReport,
    FermionicPlaquetteReport,
    FermionicTerm,
    bond_identities,
    fermionic_plaquette_operators,
    fermionic_plaquettes,
    fermionic_terms,
    fermionized_hamiltonian,
)
from src.fermionization.majorana import (
    BondOperators,
    CliffordReport,
    MajoranaSet,
    SiteOrdering,
    bond_operators,
    clifford_check,
    majorana_set,
    unit_scalar,
)

__all__ = [
    "BondIdentityReport",
    "BondOperators",
    "CliffordReport",
    "ComplexFermionSet",
    "FermionicPlaquetteReport",
    "FermionicTerm",
    "MajoranaSet",
    "SectorEnergies",
    "SectorUnion",
    "SiteOrdering",
    "bond_identities",
    "bond_operators",
    "canonical_relations",
    "canonical_relations_hold",
    "clifford_check",
    "complex_fermion_hamiltonian",
    "complex_fermions",
    "fermionic_plaquette_operators",
    "fermionic_plaquettes",
    "fermionic_terms",
    "fermionized_hamiltonian",
    "majorana_set",
    "sector_basis",
    "sector_energies",
    "sector_levels",
    "sector_spectrum",
    "sector_table",
    "sector_union",
]
