"""Site permutations on the four-spin basis and their products."""

import re
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.constants import DIM, N_SITES, PermutationKind
from src.exceptions import BadIndex, UnknownName
from src.oplin import ComplexMatrix, freeze

# Sites carried by each plaquette
PLAQUETTE_SITES = {1: {1, 2, 3}, 2: {2, 3, 4}, 3: {1, 2, 4}}


class Permutation(BaseModel):
    """A bijection on sites 1..4; ``mapping[i-1]`` is the image of site i."""

    model_config = ConfigDict(frozen=True)

    mapping: Tuple[int, int, int, int]
    kind: PermutationKind = PermutationKind.TRANSPOSITION
    name: str = Field("", description="Short label used in reports.")

    @field_validator("mapping")
    @classmethod
    def _bijection(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != list(range(1, N_SITES + 1)):
            raise ValueError(f"{value} is not a permutation of 1..{N_SITES}")
        return value

    @classmethod
    def pair_swap(cls) -> "Permutation":
        """P[12;34]: exchange the clusters (1,2) and (3,4)."""
        return cls(mapping=(3, 4, 1, 2), kind=PermutationKind.PAIR_SWAP, name="pair")

    @classmethod
    def transposition(cls, i: int, j: int) -> "Permutation":
        if i == j or not (1 <= i <= N_SITES and 1 <= j <= N_SITES):
            raise BadIndex(f"Invalid transposition ({i},{j})")
        mapping = list(range(1, N_SITES + 1))
        mapping[i - 1], mapping[j - 1] = j, i
        return cls(mapping=tuple(mapping), kind=PermutationKind.TRANSPOSITION, name=f"t{min(i, j)}{max(i, j)}")

    @classmethod
    def plaquette_swap(cls, a: int, b: int) -> "Permutation":
        """P[S_a;S_b]: transpose the two sites not shared by plaquettes a and b."""
        if a == b or a not in PLAQUETTE_SITES or b not in PLAQUETTE_SITES:
            raise BadIndex(f"Invalid plaquette pair ({a},{b})")
        i, j = sorted(PLAQUETTE_SITES[a] ^ PLAQUETTE_SITES[b])
        base = cls.transposition(i, j)
        return cls(mapping=base.mapping, kind=PermutationKind.PLAQUETTE_SWAP, name=f"s{min(a, b)}s{max(a, b)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``pair``, ``s1s2``-style plaquette swaps, or ``t14`` / ``1,4`` transpositions."""
        key = text.strip().lower()
        if key in ("pair", "pair_swap", "12;34"):
            return cls.pair_swap()
        m = re.fullmatch(r"s([123])s([123])", key)
        if m:
            return cls.plaquette_swap(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"(?:t)?\(?([1-4])[,;]?([1-4])\)?", key)
        if m:
            return cls.transposition(int(m.group(1)), int(m.group(2)))
        raise UnknownName(f"Unknown permutation {text!r}", name=text)


def permutation_matrix(p: Permutation) -> ComplexMatrix:
    return _permutation_matrix(p.mapping)


@lru_cache(maxsize=None)
def _permutation_matrix(mapping: Tuple[int, ...]) -> ComplexMatrix:
    """0/1 matrix sending |b1..b4> to the ket whose site mapping[i] carries b_i."""
    m = np.zeros((DIM, DIM), dtype=complex)
    for k in range(DIM):
        bits = [(k >> (N_SITES - 1 - i)) & 1 for i in range(N_SITES)]
        new_bits = [0] * N_SITES
        for i, b in enumerate(bits):
            new_bits[mapping[i] - 1] = b
        target = 0
        for b in new_bits:
            target = 2 * target + b
        m[target, k] = 1.0
    return freeze(m)


def braid_loop(seq: Sequence[Permutation]) -> ComplexMatrix:
    """Ordered product of permutation matrices; the rightmost acts first."""
    result = np.eye(DIM, dtype=complex)
    for p in seq:
        result = result @ permutation_matrix(p)
    return freeze(result)


def exchange_loop() -> Tuple[Permutation, ...]:
    """P[S3;S2] P[S2;S1] P[S1;S3] P[S1;S2], which closes to the identity."""
    return (
        Permutation.plaquette_swap(3, 2),
        Permutation.plaquette_swap(2, 1),
        Permutation.plaquette_swap(1, 3),
        Permutation.plaquette_swap(1, 2),
    )
