#!/usr/bin/env python3
"""
Unit tests for VerificationContext.
"""

import pytest

from src.core.arithmetic.coefficient import Coefficient
from src.core.context import VerificationContext
from src.models.suite_config import SuiteConfig


@pytest.mark.unit
class TestVerificationContext:
    """Resolved parameters and run bookkeeping."""

    def test_initialization(self, verification_context, sample_config):
        """Test VerificationContext initialization."""
        assert verification_context.config is sample_config
        assert verification_context.current_check is None
        assert verification_context.session_logger.name == "suite_runner.cocycles"

    def test_symbolic_parameters(self, verification_context, alpha, h):
        assert verification_context.alpha == alpha
        assert verification_context.h == h
        assert verification_context.alpha_label() == "symbolic"

    def test_numeric_parameters(self):
        context = VerificationContext(SuiteConfig(alpha="1/2", mu="3"))

        assert context.alpha == Coefficient(1) / 2
        assert context.mu == 3
        assert context.alpha_label() == "1/2"
        assert context.assignment() == {"alpha": Coefficient(1) / 2, "mu": Coefficient(3)}

    def test_bracket_runs_have_their_own_logger(self):
        context = VerificationContext(SuiteConfig())
        assert context.session_logger.name == "suite_runner.bracket"

    def test_alpha_label_for_given_value(self, verification_context):
        assert verification_context.alpha_label(Coefficient(-1)) == "-1"
