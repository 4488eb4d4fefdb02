#!/usr/bin/env python3
"""
Tests for the suite registry, the sequential runner and the check primitives.
"""

import pytest

from src.core.errors import MixedParity, UnknownSuite
from src.core.suites.checks import Check, CheckOutcome, expect, expect_failure, from_failures, render
from src.core.suites.field_suites import contraction_members, field_contraction_outcome
from src.core.suites.runner import SUITE_ALIASES, SUITES, SuiteEntry, SuiteRunner, get_suite, list_suites, run_suite
from src.models.suite_config import SuiteConfig


def _boom() -> CheckOutcome:
    raise MixedParity("operand mixes parities")


def _toy_entry() -> SuiteEntry:
    def builder(context):
        return [
            Check("ok", lambda: CheckOutcome(True)),
            Check("bad", lambda: CheckOutcome(False, "t - tau", "1 failures")),
            Check("boom", _boom),
        ]
    return SuiteEntry("toy", "Three canned checks", builder)


@pytest.mark.unit
class TestCheckPrimitives:
    """Outcome helpers."""

    def test_from_failures(self):
        assert from_failures([]).passed
        outcome = from_failures(["a", "b"])
        assert not outcome.passed
        assert outcome.residual == "a; b"
        assert outcome.detail == "2 failures"

    def test_render_caps_the_listing(self):
        assert render(["a", "b", "c", "d", "e"]) == "a; b; c; (+2 more)"

    def test_expect(self):
        assert expect(True, "unused").residual == ""
        assert expect(False, "wrong").residual == "wrong"

    def test_expect_failure_inverts(self):
        assert expect_failure(["found"]).passed
        outcome = expect_failure([])
        assert not outcome.passed
        assert outcome.residual == "control passed unexpectedly"


@pytest.mark.unit
class TestRegistry:
    """Registered suites."""

    def test_twelve_suites(self):
        assert len(SUITES) == 12
        assert [entry.name for entry in list_suites()][:2] == ["k4-closure", "cocycles"]

    @pytest.mark.parametrize("name", [
        "gamma-thm41", "gamma-thm52", "gamma-thm63", "k4-closure", "cocycles", "matrix-embed-I",
        "dictionary-IJ", "rep-consistency", "contraction", "psl", "remark64",
    ])
    def test_documented_names_resolve(self, name):
        assert get_suite(name).name == name

    @pytest.mark.parametrize("alias, name", sorted(SUITE_ALIASES.items()))
    def test_aliases_resolve(self, alias, name):
        assert get_suite(alias) is SUITES[name]
        assert SuiteRunner(SuiteConfig(suite=alias), False).entry.name == name

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            get_suite("bogus")
        with pytest.raises(UnknownSuite):
            SuiteRunner(SuiteConfig(suite="bogus"))

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_every_suite_builds_checks(self, name):
        runner = SuiteRunner(SuiteConfig(suite=name, mode_range=1, cutoff=-9, sample_alphas=["2"]), False)
        checks = runner.build_checks()
        assert checks
        identifiers = [check.identifier for check in checks]
        assert len(identifiers) == len(set(identifiers))


@pytest.mark.unit
class TestSuiteRunner:
    """Sequential execution and error capture."""

    def test_statuses(self, sample_config):
        report = SuiteRunner(sample_config, False, entry=_toy_entry()).run()

        assert report.suite == "toy"
        assert [record.status for record in report.checks] == ["pass", "fail", "error"]
        assert report.checks[1].residual == "t - tau"
        assert report.checks[2].detail.startswith("MixedParity:")
        assert not report.passed

    def test_no_durations_by_default(self, sample_config):
        report = SuiteRunner(sample_config, False, entry=_toy_entry()).run()
        assert all(record.duration is None for record in report.checks)

    def test_durations_with_timings(self):
        config = SuiteConfig(suite="cocycles", include_timings=True)
        report = SuiteRunner(config, False, entry=_toy_entry()).run()
        assert all(record.duration is not None for record in report.checks)

    def test_progress_is_updated_per_check(self, sample_config, mocker):
        tracker = mocker.patch("src.core.suites.runner.ProgressTracker")
        SuiteRunner(sample_config, True, entry=_toy_entry()).run()

        tracker.assert_called_once_with(3, "toy", enabled=True)
        outcomes = [call.kwargs["passed"] for call in tracker.return_value.update.call_args_list]
        assert outcomes == [True, False, False]

    def test_current_check_is_reset(self, sample_config):
        runner = SuiteRunner(sample_config, False, entry=_toy_entry())
        runner.run()
        assert runner.context.current_check is None


@pytest.mark.integration
class TestRunSuite:
    """Running registered suites."""

    def test_filtered_run(self):
        config = SuiteConfig(suite="cocycles", mode_range=1)
        report = run_suite(config, only="cocycle[S'")

        assert [record.identifier for record in report.checks] == ["cocycle[S'(2,0)]"]
        assert report.passed

    def test_cocycle_control_is_detected(self):
        config = SuiteConfig(suite="cocycles", mode_range=1)
        report = run_suite(config, only="cocycle-control")
        assert report.passed

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite(SuiteConfig(suite="bogus"))

    @pytest.mark.slow
    def test_contact_fields_suite(self):
        config = SuiteConfig(suite="contact-fields", mode_range=1, alpha="2")
        report = run_suite(config)
        assert report.passed, report.failures()


@pytest.mark.unit
class TestConfiguredWindows:
    """Check grids follow the configured mode range."""

    def test_contraction_members(self):
        assert len(contraction_members(1)) == 16 + 15 + 16
        assert len(contraction_members(2)) == 2 * 16 + len(contraction_members(1))

    @pytest.mark.parametrize("mode_range", [1, 2])
    def test_identifiers_name_the_window(self, mode_range):
        contraction_ids = [check.identifier for check in
                           SuiteRunner(SuiteConfig(suite="contraction", mode_range=mode_range), False).build_checks()]
        contact_ids = [check.identifier for check in
                       SuiteRunner(SuiteConfig(suite="contact-fields", mode_range=mode_range), False).build_checks()]

        assert f"contraction[K'(4) modes -{mode_range}..{mode_range}]" in contraction_ids
        assert f"contact-bracket[D_f]@degrees<={mode_range}" in contact_ids

    def test_contraction_uses_the_window(self, mocker):
        members = mocker.patch("src.core.suites.field_suites.contraction_members", return_value=[])
        context = SuiteRunner(SuiteConfig(suite="contraction", mode_range=2), False).context

        outcome = field_contraction_outcome(context)

        members.assert_called_once_with(2)
        assert outcome.passed


@pytest.mark.unit
class TestUnexpectedErrors:
    """Exceptions outside the engine hierarchy are recorded, not raised."""

    def test_run_continues_after_unexpected_error(self, sample_config):
        def builder(context):
            return [
                Check("crash", lambda: {}["missing"]),
                Check("after", lambda: CheckOutcome(True)),
            ]
        entry = SuiteEntry("toy", "A crashing check", builder)

        report = SuiteRunner(sample_config, False, entry=entry).run()

        assert [record.status for record in report.checks] == ["error", "pass"]
        assert report.checks[0].detail.startswith("KeyError:")

    def test_unexpected_error_is_logged_with_traceback(self, sample_config, caplog):
        entry = SuiteEntry("toy", "A crashing check", lambda context: [Check("crash", lambda: 1 / 0)])

        with caplog.at_level("ERROR", logger="suite_runner.cocycles"):
            SuiteRunner(sample_config, False, entry=entry).run()

        assert any(record.exc_info for record in caplog.records)
