from src.cli.config import RunConfig, Tolerances
from src.cli.main import main

__all__ = ["RunConfig", "Tolerances", "main"]
