#!/usr/bin/env python3
"""
Verification context shared by the checks of one suite run.
"""

import logging
from typing import Dict, Optional

from ..models.suite_config import SuiteConfig
from .arithmetic.coefficient import Coefficient, param


class VerificationContext:
    """
    Shared context for all components of a suite run.
    Holds the configuration, the resolved parameters and the run logger.
    """

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.current_check: Optional[str] = None
        self.session_logger = logging.getLogger(f"suite_runner.{config.suite or 'bracket'}")

    def parameter(self, name: str) -> Coefficient:
        """alpha, h or mu as configured: a rational or the formal parameter."""
        value = self.config.value_of(name)
        return param(name) if value is None else Coefficient(value)

    @property
    def alpha(self) -> Coefficient:
        return self.parameter("alpha")

    @property
    def h(self) -> Coefficient:
        return self.parameter("h")

    @property
    def mu(self) -> Coefficient:
        return self.parameter("mu")

    def assignment(self) -> Dict[str, Coefficient]:
        return {name: Coefficient(value) for name, value in self.config.assignment().items()}

    def alpha_label(self, alpha: Optional[Coefficient] = None) -> str:
        value = self.alpha if alpha is None else alpha
        return "symbolic" if value.depends_on("alpha") else str(value)
