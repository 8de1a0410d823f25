"""
Command-line front end: ball export, verification suites, report schemas.
"""

from .cli import main
from .models import RunConfig, SuiteResult, VerificationReport
from .suites import SUITES, run_suites

__all__ = ["RunConfig", "SUITES", "SuiteResult", "VerificationReport", "main", "run_suites"]
