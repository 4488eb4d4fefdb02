#!/usr/bin/env python3
"""
Pytest configuration and shared fixtures for the superalgebra verifier test suite.

This module provides common fixtures and test utilities used across all test modules.
"""

import pytest
from fractions import Fraction
from unittest.mock import Mock

from src.core.arithmetic.coefficient import Coefficient, param
from src.core.context import VerificationContext
from src.core.contact.field_families import P4, W2, k4_family, s2_family
from src.core.symbols.psymbol import PSymbol
from src.models.report import CheckRecord, Report
from src.models.suite_config import SuiteConfig


@pytest.fixture
def alpha():
    """The formal parameter alpha."""
    return param("alpha")


@pytest.fixture
def h():
    """The formal deformation parameter h."""
    return param("h")


@pytest.fixture
def p4():
    return P4


@pytest.fixture
def w2():
    return W2


@pytest.fixture
def sample_config():
    """A small, fast configuration."""
    return SuiteConfig(suite="cocycles", mode_range=1, cutoff=-9, sample_alphas=["2"])


@pytest.fixture
def verification_context(sample_config):
    return VerificationContext(sample_config)


@pytest.fixture
def mock_verification_context(sample_config):
    """Create a mock VerificationContext for testing."""
    context = Mock(spec=VerificationContext)
    context.config = sample_config
    context.session_logger = Mock()
    context.alpha = param("alpha")
    context.h = param("h")
    context.mu = param("mu")
    context.current_check = None
    return context


@pytest.fixture
def k4():
    """A fresh K'(4) family (brackets are cached per instance)."""
    return k4_family()


@pytest.fixture
def s2():
    return s2_family()


@pytest.fixture
def sample_report(sample_config):
    """A report with one passing and one failing check."""
    report = Report(suite="cocycles", config=sample_config)
    report.add(CheckRecord(identifier="cocycle[S'(2,0)]", status="pass"))
    report.add(CheckRecord(identifier="cocycle-control[n^5]", status="fail",
                           residual="control passed unexpectedly", detail="line one\nline two"))
    return report


@pytest.fixture
def mock_progress_tracker():
    """Create a mock ProgressTracker for testing."""
    tracker = Mock()
    tracker.update = Mock()
    tracker.finish = Mock()
    return tracker


def make_symbol(coefficient, t: int = 0, tau: int = 0, mask: int = 0) -> PSymbol:
    """Utility: a single symbol monomial over P(4)."""
    return PSymbol.monomial(coefficient, t, tau, mask, P4)


@pytest.fixture
def symbol_factory():
    """Factory fixture for symbol monomials."""
    return make_symbol


@pytest.fixture
def rationals():
    return [Coefficient(Fraction(1, 2)), Coefficient(-3), Coefficient(Fraction(7, 5))]


# Test markers for categorizing tests
def pytest_configure(config):
    """Configure custom pytest markers."""
    config.addinivalue_line("markers", "unit: marks tests as unit tests")
    config.addinivalue_line("markers", "integration: marks tests as integration tests")
    config.addinivalue_line("markers", "slow: marks tests as slow running")
