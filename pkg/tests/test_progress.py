#!/usr/bin/env python3
"""
Unit tests for the ProgressTracker used by the suite runner.

The bar is written to an injected stream so stdout stays free for reports.
"""

import pytest
from io import StringIO
from unittest.mock import patch

from src.core.utils.progress import ProgressTracker


@pytest.mark.unit
class TestProgressTracker:
    """Test cases for ProgressTracker functionality."""

    def test_initialization(self):
        """Test ProgressTracker initialization."""
        tracker = ProgressTracker(100, "cocycles")

        assert tracker.total == 100
        assert tracker.current == 0
        assert tracker.description == "cocycles"
        assert tracker.enabled
        assert isinstance(tracker.start_time, float)

    def test_defaults_to_stderr(self):
        """The default stream is stderr."""
        with patch('sys.stderr', new_callable=StringIO) as fake_stderr:
            tracker = ProgressTracker(2)
            tracker.update()

        assert "Progress" in fake_stderr.getvalue()

    def test_update_writes_bar(self):
        """Each update redraws the bar with the counter."""
        stream = StringIO()
        tracker = ProgressTracker(4, "psl", stream=stream)

        tracker.update()

        output = stream.getvalue()
        assert "psl" in output
        assert "1/4" in output
        assert "(25.0%)" in output

    def test_update_with_description_change(self):
        """Test update method with description change."""
        stream = StringIO()
        tracker = ProgressTracker(10, "Testing", stream=stream)

        tracker.update(3, "New Description")

        assert tracker.current == 3
        assert tracker.description == "New Description"
        assert "New Description" in stream.getvalue()

    def test_failures_are_counted(self):
        """Failed checks show up next to the counter."""
        stream = StringIO()
        tracker = ProgressTracker(3, "cocycles", stream=stream)

        tracker.update()
        assert "✗" not in stream.getvalue()
        tracker.update(passed=False)

        assert tracker.failed == 1
        assert "✗ 1" in stream.getvalue()

    def test_completion_ends_the_line(self):
        """Reaching the total terminates the line."""
        stream = StringIO()
        tracker = ProgressTracker(2, stream=stream)

        tracker.update()
        assert not stream.getvalue().endswith("\n")
        tracker.update()
        assert stream.getvalue().endswith("\n")

    def test_finish(self):
        """finish() jumps to the total and relabels."""
        stream = StringIO()
        tracker = ProgressTracker(5, stream=stream)

        tracker.finish("Done")

        assert tracker.current == 5
        assert "Done" in stream.getvalue()
        assert "5/5" in stream.getvalue()

    def test_disabled_tracker_is_silent(self):
        """A disabled tracker counts but writes nothing."""
        stream = StringIO()
        tracker = ProgressTracker(3, stream=stream, enabled=False)

        tracker.update()
        tracker.finish()

        assert tracker.current == 3
        assert stream.getvalue() == ""

    def test_zero_total(self):
        """An empty suite draws nothing and does not divide by zero."""
        stream = StringIO()
        tracker = ProgressTracker(0, stream=stream)

        tracker.update()

        assert stream.getvalue() == ""
