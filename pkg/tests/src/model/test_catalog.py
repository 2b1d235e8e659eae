import numpy as np
import pytest

from src.exceptions import CatalogError, UnknownName
from src.model import (
    Couplings,
    GROUND_NAMES,
    LEVEL_SPANS,
    catalog_names,
    eigen_residual,
    load_catalog,
    named_state,
    named_states,
    projector_distances,
    span_projector,
    validate_catalog,
)


def test_every_documented_state_is_an_eigenstate(headline):
    checks = validate_catalog(headline)
    assert checks
    failing = [c.name for c in checks if not c.passed]
    assert failing == []


def test_catalog_energies_scale_with_jx():
    assert all(check.passed for check in validate_catalog(Couplings.headline(0.5)))


@pytest.mark.parametrize("name, energy", [("g1", -6), ("e9", -4), ("o3", 0), ("e12", 2), ("e16", 12), ("S+B", -6)])
def test_rayleigh_energies(headline, name, energy):
    e, residual = eigen_residual(named_state(name), headline)
    assert e == pytest.approx(energy, abs=1e-10)
    assert residual < 1e-10


def test_projectors_match_numerical_eigenspaces(headline):
    distances = projector_distances(headline)
    assert set(distances) == {level for level, _ in LEVEL_SPANS}
    assert max(distances.values()) < 1e-8


def test_ground_states_are_orthonormal():
    v = np.column_stack([s.amplitudes for s in named_states(GROUND_NAMES)])
    assert np.allclose(v.conj().T @ v, np.eye(4))


def test_span_projector_is_idempotent():
    p = span_projector(named_states(["o1", "o2", "o3", "o4"]))
    assert np.allclose(p @ p, p)
    assert np.trace(p).real == pytest.approx(4)


def test_aliases_resolve():
    assert np.allclose(named_state("S−B").amplitudes, named_state("S-B").amplitudes)
    assert np.allclose(named_state("χ00").amplitudes, named_state("chi00").amplitudes)


def test_unknown_state():
    with pytest.raises(UnknownName):
        named_state("g99")


def test_reference_states_are_listed_without_energy(catalog):
    for name in ("GHZ", "W", "chi00"):
        assert name in catalog_names(catalog)
        assert catalog[name].energy is None


def test_override_flags_the_corrupted_state(headline, corrupted_catalog_file):
    table = load_catalog(corrupted_catalog_file)
    checks = {c.name: c for c in validate_catalog(headline, table)}
    assert not checks["g1"].passed
    assert checks["g2"].passed


def test_override_file_must_exist(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(str(tmp_path / "missing.yaml"))


@pytest.mark.parametrize(
    "body",
    [
        "g1: [1, 2]\n",
        "g1: 7\n",
        "g1:\n  energy: -6\n  terms: 5\n",
        "g1:\n  energy: -6\n  terms: [[\"⇓●\"]]\n",
        "g1:\n  energy: low\n  terms: []\n",
    ],
)
def test_malformed_override_entries_raise_catalog_error(tmp_path, body):
    path = tmp_path / "malformed.yaml"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(CatalogError) as info:
        load_catalog(str(path))
    assert info.value.context["state"] == "g1"
