#!/usr/bin/env python3
"""
Tests for the command-line interface.
"""

import json
import pytest

from src.core.cli import VerifierCLI, create_cli, main


@pytest.fixture
def cli(tmp_path):
    return VerifierCLI(config_file=tmp_path / "verifier.json")


@pytest.fixture
def isolated_home(tmp_path, mocker):
    """Keep the user config and the session logs out of the real environment."""
    mocker.patch("pathlib.Path.home", return_value=tmp_path)
    return mocker.patch("src.core.cli.setup_logging")


def _exit_code(argv) -> int:
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    return excinfo.value.code


@pytest.mark.unit
class TestParser:
    """Argument parsing."""

    def test_bracket_arguments(self):
        args = create_cli().parse_args(["bracket", "d", "t", "--calculus", "weyl", "--mode", "bracket"])

        assert args.command == "bracket"
        assert (args.expr1, args.expr2) == ("d", "t")
        assert args.calculus == "weyl"
        assert args.mode == "bracket"

    def test_suite_arguments(self):
        args = create_cli().parse_args(["suite", "psl", "--alpha", "1", "--format", "json", "--timings"])

        assert args.suite == "psl"
        assert args.alpha == "1"
        assert args.format == "json"
        assert args.timings

    def test_rejects_unknown_calculus(self):
        with pytest.raises(SystemExit):
            create_cli().parse_args(["bracket", "t", "tau", "--calculus", "lie"])


@pytest.mark.unit
class TestVerifierCLI:
    """User defaults and their merge with explicit flags."""

    def test_defaults_without_file(self, cli):
        assert cli.config['mode_range'] == 3
        assert cli.config['show_progress']

    def test_configure_unknown_key(self, cli):
        assert cli.configure("colour", "red") == 1

    def test_configure_bad_integer(self, cli):
        assert cli.configure("mode_range", "many") == 1

    def test_configure_invalid_value(self, cli):
        assert cli.configure("cutoff", "-3") == 1
        assert not cli.config_file.exists()

    def test_configure_saves(self, cli):
        assert cli.configure("cutoff", "-16") == 0
        assert cli.configure("include_timings", "yes") == 0

        saved = json.loads(cli.config_file.read_text(encoding='utf-8'))
        assert saved['cutoff'] == -16
        assert saved['include_timings'] is True
        assert VerifierCLI(config_file=cli.config_file).config['cutoff'] == -16

    def test_configure_show(self, cli, capsys):
        assert cli.configure() == 0
        assert "mode_range" in capsys.readouterr().out

    def test_flags_override_user_defaults(self, cli):
        cli.configure("cutoff", "-16")
        cli.configure("mode_range", "4")
        args = create_cli().parse_args(["suite", "cocycles", "--alpha", "2/4", "--range", "2", "--samples", "2,-1"])

        config = cli.suite_config(args, "cocycles")

        assert config.suite == "cocycles"
        assert config.alpha == "1/2"
        assert config.mode_range == 2
        assert config.cutoff == -16
        assert config.sample_alphas == ["2", "-1"]

    def test_quiet_disables_progress(self, cli):
        args = create_cli().parse_args(["suite", "cocycles", "--quiet"])
        assert not cli.show_progress(args)


@pytest.mark.integration
class TestMain:
    """End-to-end invocations with exit codes."""

    def test_bracket(self, isolated_home, capsys):
        assert _exit_code(["bracket", "t y1", "t x1"]) == 0
        assert "t^2" in capsys.readouterr().out

    def test_bracket_parse_error(self, isolated_home, capsys):
        assert _exit_code(["bracket", "t)", "tau"]) == 1
        assert "ParseError" in capsys.readouterr().err

    def test_unknown_suite(self, isolated_home):
        assert _exit_code(["suite", "bogus"]) == 1

    def test_list_suites(self, isolated_home, capsys):
        assert _exit_code(["list-suites"]) == 0
        out = capsys.readouterr().out
        assert "k4-closure" in out
        assert "cocycles" in out

    def test_bracket_with_declared_parameter(self, isolated_home, capsys):
        assert _exit_code(["bracket", "lam tau", "t", "--param", "lam"]) == 0
        assert "lam" in capsys.readouterr().out

    def test_shallow_suite_cutoff_is_rejected(self, isolated_home, mocker, capsys):
        runner = mocker.patch("src.core.cli.run_suite")

        assert _exit_code(["suite", "cocycles", "--cutoff", "-6"]) == 1
        runner.assert_not_called()
        assert "ValidationError" in capsys.readouterr().err

    def test_schema(self, isolated_home, capsys):
        assert _exit_code(["schema"]) == 0
        schema = json.loads(capsys.readouterr().out)
        assert "checks" in schema["properties"]

    def test_suite_shortcut_propagates_failure(self, isolated_home, mocker, sample_report, capsys):
        runner = mocker.patch("src.core.cli.run_suite", return_value=sample_report)

        assert _exit_code(["--suite", "cocycles"]) == 1
        assert runner.call_args[0][0].suite == "cocycles"
        assert "Verdict: FAIL" in capsys.readouterr().out

    def test_passing_suite_exits_zero(self, isolated_home, mocker, sample_config):
        from src.models.report import Report
        mocker.patch("src.core.cli.run_suite", return_value=Report(suite="cocycles", config=sample_config))

        assert _exit_code(["suite", "cocycles", "--format", "csv"]) == 0

    def test_report_file(self, isolated_home, mocker, sample_report, tmp_path):
        mocker.patch("src.core.cli.run_suite", return_value=sample_report)
        target = tmp_path / "out" / "report.json"

        assert _exit_code(["suite", "cocycles", "--format", "json", "--out", str(target)]) == 1
        assert json.loads(target.read_text(encoding='utf-8'))["verdict"] == "fail"

    def test_keyboard_interrupt(self, isolated_home, mocker):
        mocker.patch("src.core.cli.run_suite", side_effect=KeyboardInterrupt)
        assert _exit_code(["suite", "cocycles"]) == 0

    def test_gamma_table(self, isolated_home, capsys):
        assert _exit_code(["gamma", "table", "--sigmas", "2,-3,1"]) == 0
        assert "e1f1h1" in capsys.readouterr().out

    def test_gamma_bad_sigmas(self, isolated_home):
        assert _exit_code(["gamma", "table", "--sigmas", "1,2"]) == 1

    def test_missing_command(self, isolated_home):
        assert _exit_code([]) == 2
