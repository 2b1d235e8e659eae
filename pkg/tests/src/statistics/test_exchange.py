import itertools

import numpy as np
import pytest

from src.constants import ExchangeClass
from src.exceptions import NonUnimodularRatio, NotClosed, NotOrthonormal, NotUnitary, SupportMismatch
from src.model import GROUND_NAMES, ZERO_NAMES, FourSpinState, named_state, named_states
from src.statistics import (
    PLAQUETTE_STATE_ORDER,
    Permutation,
    chi_decomposition_check,
    classify,
    closure_check,
    exchange_report,
    excited_pair_relation,
    phase_map,
    subspace_statistics,
)

PAIR = Permutation.pair_swap()


def _stats(names, **kwargs):
    return subspace_statistics(named_states(names), PAIR, **kwargs)


def test_pair_swap_on_ground_space():
    stats = _stats(GROUND_NAMES)
    expected = [[0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]
    assert np.allclose(stats.eta, expected, atol=1e-10)
    assert stats.classification is ExchangeClass.EXOTIC


def test_g1_g3_exchange_is_sigma_x():
    stats = _stats(["g1", "g3"])
    assert np.allclose(stats.eta, [[0, 1], [1, 0]], atol=1e-10)
    assert stats.classification is ExchangeClass.EXOTIC


def test_g2_g4_exchange_is_a_signed_sigma_z():
    # g2 changes sign, g4 is fixed
    stats = _stats(["g2", "g4"])
    assert np.allclose(stats.eta, [[-1, 0], [0, 1]], atol=1e-10)
    assert stats.classification is ExchangeClass.EXOTIC


def test_e9_e10_behave_as_fermions():
    stats = _stats(["e9", "e10"])
    assert np.allclose(stats.eta, -np.eye(2), atol=1e-10)
    assert stats.classification is ExchangeClass.FERMION


def test_first_excited_exchange_pattern():
    stats = _stats(["e11", "e12", "e13", "e14"])
    expected = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]
    assert np.allclose(stats.eta, expected, atol=1e-10)


@pytest.mark.parametrize("names", [ZERO_NAMES, ("e15", "e16")])
def test_oblique_bases_are_bosonic(names):
    stats = _stats(names, allow_oblique=True)
    assert stats.oblique
    assert np.allclose(stats.eta, np.eye(len(names)), atol=1e-10)
    assert stats.classification is ExchangeClass.BOSON


def test_oblique_basis_rejected_in_strict_mode():
    with pytest.raises(NotOrthonormal):
        _stats(ZERO_NAMES)


def test_span_not_closed():
    with pytest.raises(NotClosed) as info:
        _stats(["g1", "g2"])
    assert info.value.max_residual > 0.5


def test_exchange_report_records_open_spans():
    report = exchange_report(named_states(["g1", "g2"]), PAIR)
    assert not report.closed
    assert report.eta is None
    closed = exchange_report(named_states(["g1", "g3"]), PAIR)
    assert closed.closed and closed.classification is ExchangeClass.EXOTIC


def test_classify():
    assert classify(np.eye(3)) is ExchangeClass.BOSON
    assert classify(-np.eye(2)) is ExchangeClass.FERMION
    assert classify(np.array([[0, 1], [1, 0]])) is ExchangeClass.EXOTIC
    with pytest.raises(NotUnitary):
        classify(2 * np.eye(2))


def test_excited_pair_relation():
    assert excited_pair_relation() < 1e-10


def test_chi00_splits_into_symmetric_and_antisymmetric_parts():
    assert chi_decomposition_check().passed


def test_s_plus_b_phase_map_is_i_z1_z2():
    pm = phase_map(named_state("S+B"), Permutation.plaquette_swap(1, 2))
    assert len(pm.entries) == 4
    for k, ratio in pm.entries.items():
        z1 = 1 - 2 * ((k >> 3) & 1)
        z2 = 1 - 2 * ((k >> 2) & 1)
        assert abs(ratio - 1j * z1 * z2) < 1e-10


def test_s_plus_a_phase_map_diagonal():
    pm = phase_map(named_state("S+A"), Permutation.plaquette_swap(1, 2))
    ratios = pm.ratios_in(PLAQUETTE_STATE_ORDER)
    assert np.allclose(ratios, [-1j, -1j, 1, 1, 1j, 1j, 1, 1], atol=1e-10)
    assert not pm.is_constant()


def test_symmetric_state_has_constant_phase():
    assert phase_map(named_state("W"), PAIR).is_constant()


def test_phase_map_support_mismatch():
    with pytest.raises(SupportMismatch):
        phase_map(FourSpinState.configuration("⇑○"), PAIR)


def test_phase_map_non_unimodular_ratio():
    amplitudes = np.zeros(16)
    amplitudes[0b0001], amplitudes[0b0100] = 1.0, 2.0
    with pytest.raises(NonUnimodularRatio):
        phase_map(FourSpinState.from_amplitudes(amplitudes), PAIR)


def test_pair_swap_closes_every_level(headline):
    check = closure_check(PAIR, headline)
    assert check.commutes
    assert check.open_levels == []
    assert check.consistent


@pytest.mark.parametrize("a, b", [(1, 2), (1, 3), (2, 3)])
def test_plaquette_swap_closure_matches_commutation(headline, a, b):
    check = closure_check(Permutation.plaquette_swap(a, b), headline)
    assert check.consistent


@pytest.mark.parametrize("name, ratio", [("W", 1), ("GHZ", 1), ("g2", -1), ("g4", 1)])
def test_constant_phase_map_is_the_one_dimensional_eta(name, ratio):
    psi = named_state(name)
    pm = phase_map(psi, PAIR)
    stats = subspace_statistics([psi], PAIR)
    assert pm.is_constant()
    assert next(iter(pm.entries.values())) == pytest.approx(ratio, abs=1e-10)
    assert stats.eta[0, 0] == pytest.approx(ratio, abs=1e-10)


@pytest.mark.parametrize(
    "eta",
    [
        np.eye(4),
        -np.eye(4),
        np.array([[0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]),
        np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]),
    ],
)
def test_classification_survives_reordering_the_basis(eta):
    expected = classify(eta)
    for order in itertools.permutations(range(4)):
        q = np.eye(4)[list(order)]
        assert classify(q @ eta @ q.T) is expected


def test_classify_checks_unitarity_in_the_given_metric():
    # S sigma_x S^-1 with S = diag(2, 1) preserves diag(4, 1)
    eta = np.array([[0, 2], [0.5, 0]])
    metric = np.diag([4.0, 1.0])
    with pytest.raises(NotUnitary):
        classify(eta)
    assert classify(eta, metric=metric) is ExchangeClass.EXOTIC
    assert classify(-np.eye(2), metric=metric) is ExchangeClass.FERMION


def test_exchange_report_on_oblique_bases():
    report = exchange_report(named_states(ZERO_NAMES), PAIR)
    assert report.closed and report.oblique
    assert report.classification is ExchangeClass.BOSON
    with pytest.raises(NotOrthonormal):
        exchange_report(named_states(ZERO_NAMES), PAIR, allow_oblique=False)
