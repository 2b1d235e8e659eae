from src.pipeline.verification.run import CheckResult, VerificationPipeline, VerificationReport

__all__ = ["CheckResult", "VerificationPipeline", "VerificationReport"]
