import numpy as np
import pytest

from src.constants import PermutationKind
from src.exceptions import BadIndex, UnknownName
from src.model import configuration_index
from src.statistics import Permutation, braid_loop, exchange_loop, permutation_matrix


def test_pair_swap_moves_cluster_configurations():
    p = permutation_matrix(Permutation.pair_swap())
    source = configuration_index("⇑⇓")
    assert p[configuration_index("⇓⇑"), source] == 1
    assert p[configuration_index("●●"), configuration_index("●●")] == 1


def test_plaquette_swap_transposes_the_unshared_sites():
    p = Permutation.plaquette_swap(1, 2)
    assert p.mapping == (4, 2, 3, 1)
    assert p.kind is PermutationKind.PLAQUETTE_SWAP
    assert p.name == "s1s2"
    assert Permutation.plaquette_swap(1, 3).mapping == (1, 2, 4, 3)


@pytest.mark.parametrize(
    "text, mapping",
    [("pair", (3, 4, 1, 2)), ("s2s3", (3, 2, 1, 4)), ("t14", (4, 2, 3, 1)), ("1,4", (4, 2, 3, 1))],
)
def test_parse(text, mapping):
    assert Permutation.parse(text).mapping == mapping


def test_parse_unknown():
    with pytest.raises(UnknownName):
        Permutation.parse("rotate")


def test_invalid_transpositions():
    with pytest.raises(BadIndex):
        Permutation.transposition(2, 2)
    with pytest.raises(BadIndex):
        Permutation.plaquette_swap(1, 4)


def test_mapping_must_be_a_bijection():
    with pytest.raises(ValueError):
        Permutation(mapping=(1, 1, 2, 3))


def test_permutation_matrices_are_orthogonal_involutions():
    for p in (Permutation.pair_swap(), Permutation.transposition(1, 3)):
        m = permutation_matrix(p)
        assert np.allclose(m @ m, np.eye(16))
        assert np.allclose(m.T @ m, np.eye(16))


def test_exchange_loop_closes_exactly():
    loop = braid_loop(exchange_loop())
    assert np.array_equal(loop, np.eye(16))


def test_braid_loop_order_matters():
    a, b = Permutation.plaquette_swap(1, 2), Permutation.plaquette_swap(2, 3)
    assert not np.allclose(braid_loop([a, b]), braid_loop([b, a]))
