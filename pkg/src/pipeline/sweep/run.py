import os
import uuid
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np
import pandas as pd
from colorama import Fore

from src.constants import DIM
from src.exceptions import UsageError
from src.model import Couplings, numerical_spectrum
from src.pipeline.utils import load_config, pipeline_logger
from utils.ml_logging import log_function_call

SWEEP_PARAMETERS = ("jx", "jy", "jz", "jp")


class SpectrumSweep:
    """
    Diagonalize the Hamiltonian along a line in coupling space.

    Rows come back in parameter order whatever order the workers finish in.
    """

    def __init__(
        self,
        config_file: str = os.path.join("sweep", "settings.yaml"),
        couplings: Optional[Couplings] = None,
        max_workers: Optional[int] = None,
        run_id: Optional[str] = None,
    ) -> None:
        self.config = load_config(config_file)
        self.logger = pipeline_logger(self.config, "sweep")
        self.run_id = run_id or uuid.uuid4().hex[:8]
        self.couplings = couplings or Couplings.headline()
        self.max_workers = max_workers or int(self.config.get("executor", {}).get("max_workers", 4))

    @staticmethod
    def grid(start: float, stop: float, steps: int) -> np.ndarray:
        if steps < 1:
            raise UsageError(f"steps must be at least 1, got {steps}")
        if not (np.isfinite(start) and np.isfinite(stop)):
            raise UsageError("Sweep bounds must be finite")
        return np.linspace(start, stop, steps)

    def _energies(self, param: str, value: float) -> List[float]:
        spectrum = numerical_spectrum(self.couplings.with_param(param, value))
        return [float(e) for e in spectrum.eigenvalues]

    @log_function_call("sweep")
    def run(self, param: str, start: float, stop: float, steps: int) -> pd.DataFrame:
        """
        One row per grid point: the swept value followed by the 16 ascending energies.

        Raises:
            UsageError: Unknown parameter name or an empty or non-finite range.
        """
        if param not in SWEEP_PARAMETERS:
            raise UsageError(f"Unknown sweep parameter {param!r}; choose from {', '.join(SWEEP_PARAMETERS)}")
        values = self.grid(start, stop, steps)
        self.logger.info(Fore.CYAN + f"Sweeping {param} over [{start}, {stop}] in {steps} steps")
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            rows = list(executor.map(lambda v: self._energies(param, float(v)), values))
        df = pd.DataFrame(rows, columns=[f"e{k}" for k in range(1, DIM + 1)])
        df.insert(0, "param", values)
        self.logger.info(Fore.GREEN + f"Sweep {self.run_id} finished with {len(df)} rows")
        return df
