"""Command-line interface and the reproduction suite."""

from .report import Check, VerificationReport, emit_report, load_report
from .suite import run_suite

__all__ = ["Check", "VerificationReport", "emit_report", "load_report", "run_suite"]
