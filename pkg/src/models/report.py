#!/usr/bin/env python3
"""
Verification report models.

The JSON layout is versioned by REPORT_SCHEMA_VERSION; docs/report_schema.md
describes it.
"""

from typing import List, Optional
import json

from pydantic import BaseModel, Field, field_validator

from .suite_config import SuiteConfig

REPORT_SCHEMA_VERSION = "1.0"
TOOL_VERSION = "1.0.0"

PASS = "pass"
FAIL = "fail"
ERROR = "error"


class CheckRecord(BaseModel):
    """Outcome of a single check inside a suite."""

    identifier: str = Field(..., description="Stable check identifier, e.g. hom[E1,F1]@alpha=symbolic")
    status: str = Field(..., description="pass, fail or error")
    residual: str = Field(default="", description="Canonical rendering of the non-zero residual")
    detail: str = Field(default="", description="Extra context (error message, counts)")
    duration: Optional[float] = Field(None, description="Seconds spent, only when timings are enabled")

    @field_validator('status')
    @classmethod
    def validate_status(cls, v):
        if v not in [PASS, FAIL, ERROR]:
            raise ValueError('status must be one of: pass, fail, error')
        return v

    @property
    def passed(self) -> bool:
        return self.status == PASS


class Report(BaseModel):
    """A suite run: every check listed in execution order plus the overall verdict."""

    schema_version: str = Field(default=REPORT_SCHEMA_VERSION, description="Report layout version")
    tool_version: str = Field(default=TOOL_VERSION, description="Version of the verifier")
    suite: str = Field(..., description="Suite name")
    config: SuiteConfig = Field(..., description="Configuration echo")
    checks: List[CheckRecord] = Field(default_factory=list, description="Per-check records")
    verdict: str = Field(default=PASS, description="pass iff every check passed")

    def add(self, record: CheckRecord) -> CheckRecord:
        self.checks.append(record)
        if not record.passed:
            self.verdict = FAIL
        return record

    @property
    def passed(self) -> bool:
        return self.verdict == PASS and all(check.passed for check in self.checks)

    def failures(self) -> List[CheckRecord]:
        return [check for check in self.checks if not check.passed]

    def summary(self) -> str:
        failed = len(self.failures())
        return f"{self.suite}: {len(self.checks) - failed}/{len(self.checks)} checks passed"

    def to_json(self, indent: int = 2) -> str:
        """Export report to JSON string."""
        return self.model_dump_json(indent=indent)

    def save_to_file(self, filepath: str) -> None:
        """Save report to JSON file."""
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.to_json())

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        return cls(**json.loads(text))

    @classmethod
    def load_from_file(cls, filepath: str) -> 'Report':
        """Load report from JSON file."""
        with open(filepath, 'r', encoding='utf-8') as f:
            data = json.load(f)
        return cls(**data)
