#!/usr/bin/env python3
"""
Unit tests for the pydantic configuration and report models.
"""

import json
import pytest
from fractions import Fraction

from pydantic import ValidationError

from src.models.report import REPORT_SCHEMA_VERSION, CheckRecord, Report
from src.models.suite_config import DEFAULT_SAMPLE_ALPHAS, SYMBOLIC, SuiteConfig


@pytest.mark.unit
class TestSuiteConfig:
    """Validation and helpers of SuiteConfig."""

    def test_defaults(self):
        """Test default configuration values."""
        config = SuiteConfig()

        assert config.alpha == SYMBOLIC
        assert config.h == SYMBOLIC
        assert config.mode_range == 3
        assert config.cutoff == -12
        assert config.output_format == "text"
        assert config.sample_alphas == DEFAULT_SAMPLE_ALPHAS
        assert not config.include_timings

    def test_rationals_are_normalized(self):
        config = SuiteConfig(alpha="2/4", h=" 3 ", mu="formal")

        assert config.alpha == "1/2"
        assert config.h == "3"
        assert config.mu == SYMBOLIC

    def test_value_of_and_assignment(self):
        config = SuiteConfig(alpha="1/2")

        assert config.value_of("alpha") == Fraction(1, 2)
        assert config.value_of("h") is None
        assert config.assignment() == {"alpha": Fraction(1, 2)}

    def test_sample_values(self):
        config = SuiteConfig(sample_alphas=["1/2", "-1"])
        assert config.sample_values() == [Fraction(1, 2), Fraction(-1)]

    @pytest.mark.parametrize("field, value", [
        ("alpha", "two"),
        ("h", "1/0"),
        ("mode_range", 0),
        ("cutoff", -3),
        ("output_format", "xml"),
        ("sample_alphas", ["symbolic"]),
    ])
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError):
            SuiteConfig(**{field: value})

    def test_suite_window_too_shallow(self):
        with pytest.raises(ValidationError, match="at least 8"):
            SuiteConfig(suite="psl", cutoff=-8)

    def test_suite_window_minimum(self):
        config = SuiteConfig(suite="psl", cutoff=-9)
        assert config.window_depth == 8
        assert SuiteConfig().window_depth == 11

    def test_bracket_config_may_cut_shallower(self):
        assert SuiteConfig(cutoff=-6).cutoff == -6

    def test_file_round_trip(self, tmp_path):
        """Test saving and loading configuration."""
        config = SuiteConfig(suite="psl", alpha="-1", mode_range=2)
        filepath = tmp_path / "config.json"

        config.save_to_file(str(filepath))
        loaded = SuiteConfig.load_from_file(str(filepath))

        assert loaded == config


@pytest.mark.unit
class TestReport:
    """CheckRecord validation and Report bookkeeping."""

    def test_status_is_validated(self):
        with pytest.raises(ValidationError):
            CheckRecord(identifier="x", status="skipped")

    def test_verdict_follows_records(self, sample_config):
        report = Report(suite="cocycles", config=sample_config)
        assert report.passed

        report.add(CheckRecord(identifier="a", status="pass"))
        assert report.passed
        report.add(CheckRecord(identifier="b", status="error", detail="MixedParity: boom"))

        assert not report.passed
        assert report.verdict == "fail"
        assert [r.identifier for r in report.failures()] == ["b"]

    def test_summary(self, sample_report):
        assert sample_report.summary() == "cocycles: 1/2 checks passed"

    def test_versions(self, sample_report):
        data = json.loads(sample_report.to_json())

        assert data["schema_version"] == REPORT_SCHEMA_VERSION
        assert data["tool_version"] == "1.0.0"
        assert data["config"]["mode_range"] == 1

    def test_json_round_trip(self, sample_report):
        restored = Report.from_json(sample_report.to_json())

        assert restored == sample_report
        assert restored.checks[1].detail == "line one\nline two"

    def test_file_round_trip(self, sample_report, tmp_path):
        filepath = tmp_path / "report.json"

        sample_report.save_to_file(str(filepath))

        assert Report.load_from_file(str(filepath)) == sample_report
