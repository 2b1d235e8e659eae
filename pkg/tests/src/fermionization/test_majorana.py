import numpy as np
import pytest

from src.exceptions import NoScalarMatch, UnsupportedOrdering
from src.fermionization import SiteOrdering, bond_operators, clifford_check, majorana_set, unit_scalar
from src.oplin import PauliString, compile_pauli


def _pauli(text, coefficient=1):
    return compile_pauli(PauliString.parse(text, coefficient=coefficient))


def test_eight_majoranas_satisfy_the_clifford_algebra():
    report = clifford_check()
    assert report.passed
    assert len(report.square_errors) == 8
    assert len(report.anticommutators) == 28


def test_majoranas_are_hermitian():
    for _, op in majorana_set().operators():
        assert np.allclose(op, op.conj().T)


def test_bond_operators_are_x_bonds():
    bonds = bond_operators()
    assert np.allclose(bonds.b14, -_pauli("x1 x4"))
    assert np.allclose(bonds.b23, -_pauli("x2 x3"))


def test_gauge_dressed_bonds_agree():
    bonds = bond_operators()
    s2 = _pauli("z4 y2 x3")
    s3 = _pauli("x1 z2 y4")
    expected = 1j * _pauli("z2 z4")
    assert np.allclose(s2 @ bonds.b23, expected)
    assert np.allclose(s3 @ bonds.b14, expected)


def test_other_orderings_are_rejected():
    with pytest.raises(UnsupportedOrdering):
        majorana_set(SiteOrdering(order=(1, 2, 3, 4)))


def test_ordering_must_be_a_bijection():
    with pytest.raises(ValueError):
        SiteOrdering(order=(1, 1, 2, 3))


def test_unit_scalar():
    z = _pauli("z1")
    assert unit_scalar(1j * z, z) == 1j
    assert unit_scalar(-z, z) == -1
    with pytest.raises(NoScalarMatch):
        unit_scalar(2 * z, z)
    with pytest.raises(NoScalarMatch):
        unit_scalar(_pauli("x1"), z)
