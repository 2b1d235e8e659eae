from src.entanglement.concurrence import (
    ConcurrenceOperatorReport,
    concurrence_operator_check,
    concurrence_tau,
)
from src.entanglement.density import (
    DensityMatrix,
    partial_trace,
    printed_eigenvalue_magnitudes,
    printed_reduced_density,
    unnormalized_entropy_magnitude,
    von_neumann_entropy,
)

__all__ = [
    "ConcurrenceOperatorReport",
    "DensityMatrix",
    "concurrence_operator_check",
    "concurrence_tau",
    "partial_trace",
    "printed_eigenvalue_magnitudes",
    "printed_reduced_density",
    "unnormalized_entropy_magnitude",
    "von_neumann_entropy",
]
