from typing import Any, Optional


class TriangularStarError(Exception):
    EXIT_CODE = 2
    DETAIL = "Verification error"

    def __init__(self, detail: Optional[str] = None, **context: Any) -> None:
        self.detail = detail or self.DETAIL
        self.context = context
        super().__init__(self.detail)

    def to_report(self) -> dict:
        report = {"error": type(self).__name__, "detail": self.detail}
        for key, value in self.context.items():
            if isinstance(value, (str, int, float, bool)) or value is None:
                report[key] = value
        return report


class UsageError(TriangularStarError):
    EXIT_CODE = 1
    DETAIL = "Invalid command-line usage"


class DuplicateSite(TriangularStarError):
    DETAIL = "A site appears more than once in a Pauli string"


class DimensionMismatch(TriangularStarError):
    DETAIL = "Operand dimensions do not agree"


class NotHermitian(TriangularStarError):
    DETAIL = "Matrix is not Hermitian within tolerance"


class NotConverged(TriangularStarError):
    DETAIL = "Jacobi sweeps did not converge"


class BadIndex(TriangularStarError):
    DETAIL = "Index out of range"


class UnknownName(TriangularStarError):
    EXIT_CODE = 1
    DETAIL = "Unknown catalog or permutation name"


class CatalogError(TriangularStarError):
    DETAIL = "Catalog entry failed validation"


class NotSectorEigenstate(TriangularStarError):
    DETAIL = "State is not a simultaneous plaquette eigenstate"


class SubspaceLeak(TriangularStarError):
    DETAIL = "Operator maps the subspace outside itself"


class NotClosed(TriangularStarError):
    DETAIL = "Permuted basis leaves the span of the basis"

    def __init__(self, detail: Optional[str] = None, max_residual: float = 0.0, leak=None) -> None:
        super().__init__(detail, max_residual=max_residual)
        self.max_residual = max_residual
        self.leak = leak


class NotOrthonormal(TriangularStarError):
    DETAIL = "Basis is not orthonormal"


class NotUnitary(TriangularStarError):
    DETAIL = "Matrix is not unitary within tolerance"


class SupportMismatch(TriangularStarError):
    DETAIL = "Permuted state has support outside the input support"


class NonUnimodularRatio(TriangularStarError):
    DETAIL = "Amplitude ratio does not have unit modulus"


class UnsupportedOrdering(TriangularStarError):
    DETAIL = "Only the [1, 4, 2, 3] site ordering is supported"


class NoScalarMatch(TriangularStarError):
    DETAIL = "No unit scalar relates the two operators"


class BadSubsystem(TriangularStarError):
    EXIT_CODE = 1
    DETAIL = "Retained sites must form a nonempty proper subset of {1, 2, 3, 4}"


class InvalidDensity(TriangularStarError):
    DETAIL = "Matrix is not a valid density matrix"
