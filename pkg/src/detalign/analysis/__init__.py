"""Bound checks, zero-error verification, and rate sweeps."""

from .bounds import BoundReport, Condition2Result, check_theorem1
from .sweep import CSV_HEADER, ModelConfig, RateRow, dof_sweep, rows_to_csv
from .verify import EXHAUSTIVE, Scope, VerificationReport, codec_channel, sampled, verify_zero_error

__all__ = [
    "BoundReport",
    "Condition2Result",
    "check_theorem1",
    "CSV_HEADER",
    "ModelConfig",
    "RateRow",
    "dof_sweep",
    "rows_to_csv",
    "EXHAUSTIVE",
    "Scope",
    "VerificationReport",
    "codec_channel",
    "sampled",
    "verify_zero_error",
]
