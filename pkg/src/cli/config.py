from typing import Optional

from pydantic import BaseModel, Field, field_validator

from src.constants import EIGEN_TOL, IDENTITY_TOL, LEVEL_TOL, OutputFormat
from src.model import Couplings


class Tolerances(BaseModel):
    identity: float = Field(IDENTITY_TOL, description="Operator identities and commutators.")
    eigen: float = Field(EIGEN_TOL, description="Eigenvalue agreement.")
    level: float = Field(LEVEL_TOL, description="Grouping of degenerate levels.")

    @field_validator("identity", "eigen", "level")
    @classmethod
    def _positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tolerances must be positive")
        return value


class RunConfig(BaseModel):
    """Settings shared by every subcommand; ``--config`` files validate against this schema."""

    couplings: Couplings = Field(default_factory=Couplings.headline)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None
    catalog_file: Optional[str] = None
