import numpy as np
import pytest

from src.fermionization import bond_identities, fermionic_plaquettes, fermionic_terms, fermionized_hamiltonian
from src.model import Couplings, build_hamiltonian
from src.oplin import frobenius
from tests.conftest import draw_couplings


def test_fermionized_hamiltonian_matches_spin_form(headline):
    assert frobenius(fermionized_hamiltonian(headline) - build_hamiltonian(headline)) < 1e-12


def test_fermionized_hamiltonian_matches_random_couplings(rng):
    for c in draw_couplings(rng, 50):
        assert frobenius(fermionized_hamiltonian(c) - build_hamiltonian(c)) < 1e-12


def test_single_coupling_terms():
    for name in ("jx", "jy", "jz", "jp"):
        c = Couplings.zero().with_param(name, 1.0)
        assert frobenius(fermionized_hamiltonian(c) - build_hamiltonian(c)) < 1e-12


def test_term_scalars_flag_the_sign_of_the_second_x_term():
    terms = fermionic_terms()
    assert len(terms) == 6
    assert [t.scalar for t in terms] == pytest.approx([1, -1, 1, 1, 1, 1])
    assert [t.exact for t in terms] == [True, False, True, True, True, True]
    assert terms[1].spin_bond == "x1 x3"


def test_bond_identities(headline):
    report = bond_identities(headline)
    assert report.passed
    assert report.printed_failures == ["S1S3+B14B23", "S2S4+B14B23", "[B14,H]", "[B23,H]"]
    assert report.printed["[B14,B23]"] < 1e-12


def test_bonds_are_conserved_without_y_coupling():
    report = bond_identities(Couplings(jx=1.0, jy=0.0, jz=2.0, jp=2.0))
    assert report.printed["[B14,H]"] < 1e-12
    assert report.printed["[B23,H]"] < 1e-12


def test_fermionic_plaquettes():
    report = fermionic_plaquettes()
    assert report.scalars == pytest.approx([-1, 1, 1, 1])
    assert all(p.square_error < 1e-12 for p in report.plaquettes)
    assert all(p.distance < 1e-12 for p in report.plaquettes)
    assert report.triple_product_scalar == pytest.approx(-1)
    assert report.spin_triple_product_scalar == pytest.approx(1)
    assert report.triple_consistent


def test_fermionized_hamiltonian_is_hermitian(headline):
    h = fermionized_hamiltonian(headline)
    assert np.allclose(h, h.conj().T)
