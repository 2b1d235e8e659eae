import math

import numpy as np
import pytest

from src.constants import FrustrationClass
from src.exceptions import BadIndex, DimensionMismatch
from src.model import Couplings, FourSpinState, GaugeSector, configuration_index, index_arrows, index_symbols


@pytest.mark.parametrize("text", ["⇓●", "↓↓↓↑", "dddu", "|⇓●⟩"])
def test_configuration_spellings_name_the_same_index(text):
    assert configuration_index(text) == 14


def test_double_spin_symbols():
    assert configuration_index("⇑⇑") == 0
    assert configuration_index("○○") == 0b0101
    assert configuration_index("●●") == 0b1010
    assert index_symbols(14) == "⇓●"
    assert index_arrows(14) == "↓↓↓↑"


@pytest.mark.parametrize("text", ["⇑", "⇑⇑⇑", "x⇑⇑"])
def test_bad_configurations(text):
    with pytest.raises(BadIndex):
        configuration_index(text)


def test_headline_couplings():
    c = Couplings.headline()
    assert (c.jx, c.jy, c.jz, c.jp) == (1.0, 2.0, 2.0, 2.0)
    assert c.with_param("jp", 0).jp == 0.0
    assert Couplings.headline(0.5).jz == 1.0


def test_couplings_reject_non_finite_values():
    with pytest.raises(ValueError):
        Couplings(jx=math.inf)


def test_from_amplitudes_normalizes():
    state = FourSpinState.from_amplitudes([3, 4] + [0] * 14, label="psi")
    assert np.isclose(np.linalg.norm(state.amplitudes), 1.0)
    assert state.support(1e-12) == [0, 1]


def test_unnormalized_amplitudes_are_rejected():
    with pytest.raises(ValueError):
        FourSpinState(amplitudes=[1, 1] + [0] * 14)


def test_wrong_length_is_rejected():
    with pytest.raises(DimensionMismatch):
        FourSpinState.from_amplitudes([1, 0, 0])


def test_zero_vector_cannot_be_normalized():
    with pytest.raises(DimensionMismatch):
        FourSpinState.from_amplitudes(np.zeros(16))


def test_gauge_sectors():
    sectors = GaugeSector.all_sectors()
    assert len(set(sectors)) == 8
    homogeneous = GaugeSector(s1=1, s2=1, s3=1)
    assert homogeneous.frustration_sum == 3
    assert homogeneous.frustration_class is FrustrationClass.FULLY_FRUSTRATED
    mixed = GaugeSector(s1=1, s2=1, s3=-1)
    assert mixed.frustration_sum == -1
    assert mixed.frustration_class.plaquette_energy_sum == -1


def test_gauge_sector_values_are_ising():
    with pytest.raises(ValueError):
        GaugeSector(s1=0, s2=1, s3=1)
