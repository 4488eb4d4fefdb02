#!/usr/bin/env python3
"""
Tests for report rendering and emission.
"""

import json
import pytest
from io import StringIO

from src.core.errors import IOFailure
from src.core.reporting.report_writer import (
    emit_report,
    render_csv,
    render_json,
    render_report,
    render_text,
    report_frame,
)
from src.models.report import Report
from src.models.suite_config import SuiteConfig


@pytest.mark.unit
class TestReportFrame:
    """Tabular view of a report."""

    def test_columns_and_rows(self, sample_report):
        frame = report_frame(sample_report)

        assert list(frame.columns) == ['identifier', 'status', 'residual', 'detail']
        assert list(frame['status']) == ['pass', 'fail']

    def test_multiline_cells_are_joined(self, sample_report):
        frame = report_frame(sample_report)
        assert frame['detail'].iloc[1] == "line one / line two"

    def test_duration_only_with_timings(self, sample_report):
        assert 'duration' not in report_frame(sample_report).columns

        timed = Report(suite="cocycles", config=SuiteConfig(include_timings=True))
        for record in sample_report.checks:
            timed.add(record.model_copy(update={'duration': 0.5}))

        assert 'duration' in report_frame(timed).columns


@pytest.mark.unit
class TestRenderers:
    """Text, CSV and JSON renderings."""

    def test_text(self, sample_report):
        text = render_text(sample_report)

        assert text.startswith("Suite:   cocycles\n")
        assert "Verdict: FAIL  (cocycles: 1/2 checks passed)" in text
        assert "line one / line two" in text
        assert text.endswith("\n")

    def test_text_without_checks(self, sample_config):
        assert "(no checks)" in render_text(Report(suite="cocycles", config=sample_config))

    def test_csv(self, sample_report):
        lines = render_csv(sample_report).splitlines()

        assert lines[0] == "identifier,status,residual,detail"
        assert len(lines) == 3
        assert "\r" not in render_csv(sample_report)

    def test_json_round_trip(self, sample_report):
        text = render_json(sample_report)

        assert text.endswith("}\n")
        assert Report.from_json(text) == sample_report
        assert json.loads(text)["verdict"] == "fail"

    def test_dispatch(self, sample_report):
        assert render_report(sample_report, 'csv') == render_csv(sample_report)
        assert render_report(sample_report) == render_text(sample_report)

    def test_unknown_format(self, sample_report):
        with pytest.raises(ValueError):
            render_report(sample_report, 'xml')

    @pytest.mark.parametrize("output_format", ['text', 'csv', 'json'])
    def test_deterministic(self, sample_report, output_format):
        assert render_report(sample_report, output_format) == render_report(sample_report, output_format)


@pytest.mark.unit
class TestEmitReport:
    """Writing renderings to files and streams."""

    def test_to_stream(self, sample_report):
        stream = StringIO()

        data = emit_report(sample_report, 'csv', stream=stream)

        assert stream.getvalue() == render_csv(sample_report)
        assert data == render_csv(sample_report).encode('utf-8')

    def test_to_file(self, sample_report, tmp_path):
        target = tmp_path / "reports" / "run.json"

        data = emit_report(sample_report, 'json', out=str(target))

        assert target.read_bytes() == data
        assert Report.from_json(target.read_text(encoding='utf-8')) == sample_report

    def test_unwritable_target(self, sample_report, tmp_path):
        with pytest.raises(IOFailure):
            emit_report(sample_report, 'text', out=str(tmp_path))

    def test_failing_stream(self, sample_report, mocker):
        stream = mocker.Mock()
        stream.write.side_effect = OSError("broken pipe")

        with pytest.raises(IOFailure):
            emit_report(sample_report, 'text', stream=stream)
