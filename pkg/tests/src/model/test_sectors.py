import numpy as np
import pytest

from src.exceptions import NotSectorEigenstate, SubspaceLeak
from src.model import (
    GROUND_NAMES,
    ZERO_NAMES,
    GaugeSector,
    load_catalog,
    named_state,
    plaquette,
    plaquette_ground_action,
    project_onto_sector,
    sector_of,
    sector_projector,
    unit_configuration_check,
    z2_flip_signs,
)
from src.oplin import PauliString, compile_pauli

# S1 g1 = i g3, S1 g2 = -i g4, S1 g3 = -i g1, S1 g4 = i g2
S1_GROUND_ACTION = np.array([[0, 0, 1j, 0], [0, 0, 0, -1j], [-1j, 0, 0, 0], [0, 1j, 0, 0]])


def test_s1_action_on_ground_basis():
    assert np.allclose(plaquette_ground_action(), S1_GROUND_ACTION, atol=1e-10)


def test_operator_leaving_the_ground_span():
    with pytest.raises(SubspaceLeak):
        plaquette_ground_action(operator=compile_pauli(PauliString.parse("x1")))


@pytest.mark.parametrize(
    "name, signs",
    [("S+A", (1, -1, 1)), ("S+B", (1, 1, -1)), ("S-A", (-1, 1, -1)), ("S-B", (-1, -1, 1))],
)
def test_plaquette_eigenstate_sectors(name, signs):
    assert sector_of(named_state(name)).signs == signs


def test_highest_state_is_not_an_s1_eigenstate():
    with pytest.raises(NotSectorEigenstate):
        sector_of(named_state("e15"))


def test_projecting_e15_into_the_homogeneous_sector():
    homogeneous = GaugeSector(s1=1, s2=1, s3=1)
    component = project_onto_sector(named_state("e15"), homogeneous)
    assert sector_of(component) == homogeneous


def test_projection_without_component_fails():
    with pytest.raises(NotSectorEigenstate):
        project_onto_sector(named_state("S+B"), GaugeSector(s1=-1, s2=1, s3=1))


def test_sector_projectors_resolve_the_identity():
    total = sum(sector_projector(s) for s in GaugeSector.all_sectors())
    assert np.allclose(total, np.eye(16))
    for s in GaugeSector.all_sectors():
        assert np.trace(sector_projector(s)).real == pytest.approx(2)
        p = sector_projector(s)
        assert np.allclose(plaquette(1) @ p, s.s1 * p)


def test_z2_flip_signs():
    signs = z2_flip_signs(GROUND_NAMES + ZERO_NAMES + ("e15", "e16"))
    for name in GROUND_NAMES:
        assert signs[name] == pytest.approx(-1, abs=1e-10)
    for name in ZERO_NAMES + ("e15", "e16"):
        assert signs[name] == pytest.approx(1, abs=1e-10)


def test_o1_and_e16_from_unit_configurations():
    report = unit_configuration_check()
    assert report.passed
    assert report.o1_distance < 1e-10
    assert report.e16_distance < 1e-10
    assert report.distance == max(report.o1_distance, report.e16_distance)


def test_unit_configurations_flag_a_wrong_o1(tmp_path):
    path = tmp_path / "o1.yaml"
    path.write_text(
        "o1:\n  energy: 0\n  terms: [[\"⇑⇑\", 1], [\"⇓⇓\", 1], [\"○●\", 2], [\"●○\", 2], [\"○○\", 5], [\"●●\", 5]]\n",
        encoding="utf-8",
    )
    report = unit_configuration_check(load_catalog(str(path)))
    assert not report.passed
    assert report.o1_distance > 0.5
    assert report.e16_distance < 1e-10
