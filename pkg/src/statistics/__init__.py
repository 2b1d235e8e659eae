from src.statistics.exchange import (
    ChiDecomposition,
    ClosureCheck,
    ExchangeReport,
    PhaseMap,
    StatisticalMatrix,
    chi_decomposition_check,
    classify,
    closure_check,
    exchange_report,
    excited_pair_relation,
    phase_map,
    subspace_statistics,
)
from src.statistics.permutations import (
    Permutation,
    braid_loop,
    exchange_loop,
    permutation_matrix,
)

# Configurations of S+A in the order used for its diagonal matrix form:
# ⇓● ⇑○ ⇑● ⇓○ ●⇑ ○⇓ ●⇓ ○⇑
PLAQUETTE_STATE_ORDER = (14, 1, 2, 13, 8, 7, 11, 4)
