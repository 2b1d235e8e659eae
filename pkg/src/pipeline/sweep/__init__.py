from src.pipeline.sweep.run import SWEEP_PARAMETERS, SpectrumSweep

__all__ = ["SWEEP_PARAMETERS", "SpectrumSweep"]
