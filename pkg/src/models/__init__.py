"""Configuration and report models."""

from .report import ERROR, FAIL, PASS, REPORT_SCHEMA_VERSION, TOOL_VERSION, CheckRecord, Report
from .suite_config import DEFAULT_SAMPLE_ALPHAS, OUTPUT_FORMATS, SYMBOLIC, SuiteConfig

__all__ = [
    'ERROR',
    'FAIL',
    'PASS',
    'REPORT_SCHEMA_VERSION',
    'TOOL_VERSION',
    'CheckRecord',
    'Report',
    'DEFAULT_SAMPLE_ALPHAS',
    'OUTPUT_FORMATS',
    'SYMBOLIC',
    'SuiteConfig',
]
