#!/usr/bin/env python3
"""
Tests for the entry points behind the CLI.
"""

import logging
import pytest

from src.core.errors import MixedParity, ParseError, UnknownVariant
from src.core.main import BracketResult, compute_bracket, gamma_table, setup_logging, verify_gamma, write_report
from src.core.symbols.psymbol import PSymbol
from src.models.suite_config import SuiteConfig


@pytest.mark.unit
class TestComputeBracket:
    """One bracket or product per calculus."""

    def test_poisson_canonical_pair(self):
        result = compute_bracket("tau", "t")

        assert isinstance(result, BracketResult)
        assert result.text == "1"
        assert result.exact
        assert result.render().endswith("[exact]")

    def test_poisson_odd_generators(self):
        assert compute_bracket("t y1", "t x1", "poisson").text == "t^2"

    def test_weyl_defaults_to_product(self):
        result = compute_bracket("d", "t", "weyl")

        assert result.mode == "product"
        assert result.text == "t d + t"

    def test_weyl_commutator(self):
        assert compute_bracket("d", "t", "weyl", mode="bracket").text == "t"

    def test_contact(self):
        assert compute_bracket("x1", "y1", "contact").text == "-1"

    def test_numeric_alpha_is_substituted(self):
        result = compute_bracket("alpha tau", "t", config=SuiteConfig(alpha="2"))
        assert result.text == "2"

    def test_truncated_product(self):
        result = compute_bracket("tau^-1", "t^-1", "circ_h", config=SuiteConfig(cutoff=-6), mode="product")

        assert isinstance(result.value, PSymbol)
        assert not result.exact
        assert "truncated below tau^-6" in result.render()

    def test_unknown_calculus(self):
        with pytest.raises(UnknownVariant):
            compute_bracket("t", "tau", "lie")

    def test_unknown_mode(self):
        with pytest.raises(UnknownVariant):
            compute_bracket("t", "tau", "poisson", mode="anticommutator")

    def test_errors_propagate(self):
        with pytest.raises(ParseError):
            compute_bracket("t)", "tau")
        with pytest.raises(MixedParity):
            compute_bracket("t + x1", "tau")


@pytest.mark.unit
class TestGammaTable:
    """Structure-constant tables."""

    def test_columns(self):
        frame = gamma_table("2")

        assert list(frame.columns) == ['a', 'b', 'bracket']
        assert len(frame) > 0

    def test_explicit_sigmas(self):
        frame = gamma_table(sigmas=("2", "-3", "1"))
        row = frame[(frame['a'] == "e1f1h1") & (frame['b'] == "e2f2h2")]

        assert len(row) == 1
        assert "P1(e1,e2)" in row['bracket'].iloc[0]

    def test_unknown_variant(self, sample_config):
        with pytest.raises(UnknownVariant):
            verify_gamma(sample_config, "quantum", show_progress=False)


@pytest.mark.unit
class TestLoggingAndReports:
    """Session logging and report emission."""

    def test_setup_logging_creates_file(self, tmp_path, capsys):
        root = logging.getLogger()
        saved_handlers, saved_level = list(root.handlers), root.level
        try:
            setup_logging("unit", str(tmp_path / "logs"))
            logging.getLogger("src.core.test").info("hello")
            for handler in root.handlers:
                handler.flush()

            files = list((tmp_path / "logs").glob("unit_*.log"))
            assert len(files) == 1
            assert "hello" in files[0].read_text(encoding='utf-8')
            assert "Debug logging to" in capsys.readouterr().err
        finally:
            for handler in root.handlers:
                handler.close()
            root.handlers[:] = saved_handlers
            root.setLevel(saved_level)

    def test_write_report(self, sample_report, tmp_path, capsys):
        target = tmp_path / "report.csv"

        data = write_report(sample_report, "csv", str(target))

        assert target.read_bytes() == data
        assert capsys.readouterr().out == ""
