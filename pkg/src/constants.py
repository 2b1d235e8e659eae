from enum import Enum

N_SITES = 4
DIM = 2**N_SITES

# Tolerances
IDENTITY_TOL = 1e-12
EIGEN_TOL = 1e-9
LEVEL_TOL = 1e-6
CATALOG_TOL = 1e-10
SUPPORT_EPS = 1e-10
JACOBI_REL_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


class Axis(str, Enum):
    X = "x"
    Y = "y"
    Z = "z"


class ExchangeClass(str, Enum):
    BOSON = "boson"
    FERMION = "fermion"
    EXOTIC = "exotic"


class FrustrationClass(str, Enum):
    FULLY_FRUSTRATED = "fully_frustrated"
    MINIMALLY_FRUSTRATED = "minimally_frustrated"

    @property
    def plaquette_energy_sum(self) -> int:
        return 3 if self is FrustrationClass.FULLY_FRUSTRATED else -1


class PermutationKind(str, Enum):
    PAIR_SWAP = "pair_swap"
    TRANSPOSITION = "transposition"
    PLAQUETTE_SWAP = "plaquette_swap"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"

    @property
    def is_tabular(self) -> bool:
        return self == self.CSV
