"""Verification suites over the algebra engine."""

from .checks import Check, CheckOutcome
from .runner import SUITES, SuiteEntry, SuiteRunner, get_suite, list_suites, run_suite

__all__ = [
    'Check',
    'CheckOutcome',
    'SUITES',
    'SuiteEntry',
    'SuiteRunner',
    'get_suite',
    'list_suites',
    'run_suite',
]
