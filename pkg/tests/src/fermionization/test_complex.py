from src.fermionization import (
    canonical_relations,
    canonical_relations_hold,
    complex_fermion_hamiltonian,
    complex_fermions,
)
from src.model import Couplings, build_hamiltonian
from src.oplin import frobenius
from tests.conftest import draw_couplings


def test_canonical_anticommutation_relations(headline):
    f = complex_fermions(headline)
    assert canonical_relations_hold(f)
    assert set(canonical_relations(f)) >= {"{c_a,c_a+}-I", "{c_b,c_b+}-I", "c_a^2", "c_b^2"}


def test_number_operators_are_projectors(headline):
    f = complex_fermions(headline)
    for n in (f.n_a, f.n_b):
        assert frobenius(n @ n - n) < 1e-12


def test_pairing_form_matches_spin_hamiltonian(headline):
    assert frobenius(complex_fermion_hamiltonian(headline) - build_hamiltonian(headline)) < 1e-12


def test_pairing_form_random_couplings(rng):
    for c in draw_couplings(rng, 20):
        assert frobenius(complex_fermion_hamiltonian(c) - build_hamiltonian(c)) < 1e-12


def test_gap_and_hopping_adjoints():
    f = complex_fermions(Couplings(jx=0.3, jy=-1.1, jz=0.7, jp=0.2))
    assert frobenius(f.delta.conj().T - f.delta_conj) < 1e-12
    assert frobenius(f.t.conj().T - f.t_conj) < 1e-12
