#!/usr/bin/env python3
"""
Suite registry and the sequential suite runner.

Each suite is a builder ``context -> [Check]``; the runner executes the
checks in order, turns engine errors into ``error`` records and keeps going.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from ...models.report import ERROR, FAIL, PASS, CheckRecord, Report
from ...models.suite_config import SuiteConfig
from ..context import VerificationContext
from ..errors import AlgebraError, UnknownSuite
from ..utils.progress import ProgressTracker
from .checks import Check
from .field_suites import cocycles, contact_fields, contraction, k4_closure
from .gamma_suites import poisson_suite, deformed_suite, matrix_suite, psl, pseudo_suite
from .matrix_suites import dictionary_ij, matrix_embed_i, rep_consistency

logger = logging.getLogger(__name__)

SuiteBuilder = Callable[[VerificationContext], List[Check]]


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    description: str
    builder: SuiteBuilder


SUITES: Dict[str, SuiteEntry] = {
    entry.name: entry for entry in (
        SuiteEntry("k4-closure", "K'(4) field family closed under the Poisson bracket", k4_closure),
        SuiteEntry("cocycles", "Central-extension cocycles of S'(2,0) and K'(4), with a mutation control", cocycles),
        SuiteEntry("contact-fields", "Witt relations, S(2,alpha) membership and the contact correspondence",
                   contact_fields),
        SuiteEntry("contraction", "h -> 0 contraction of deformed brackets, generators and fields", contraction),
        SuiteEntry("matrix-embed-I", "Matrix embedding I of K'(4)^ and its degree-zero shape", matrix_embed_i),
        SuiteEntry("dictionary-IJ", "Second embedding J and the equality of the I and J images", dictionary_ij),
        SuiteEntry("rep-consistency", "Module V^mu against the matrix action and the bracket", rep_consistency),
        SuiteEntry("gamma-thm41", "Gamma_alpha in P(4): homomorphism, generation, Jacobi boundary", poisson_suite),
        SuiteEntry("gamma-thm52", "Gamma_alpha in P_h(4) and its h -> 0 limit", deformed_suite),
        SuiteEntry("gamma-thm63", "Gamma_alpha as (2|2) Weyl matrices", matrix_suite),
        SuiteEntry("remark64", "Pseudodifferential realizations from the K'(4) fields", pseudo_suite),
        SuiteEntry("psl", "psl(2|2) degenerations at alpha = 1 and alpha = -1", psl),
    )
}


# descriptive names accepted in place of the registered ones
SUITE_ALIASES: Dict[str, str] = {
    "gamma-poisson": "gamma-thm41",
    "gamma-deformed": "gamma-thm52",
    "gamma-matrix": "gamma-thm63",
    "gamma-pseudo": "remark64",
}


def list_suites() -> List[SuiteEntry]:
    return list(SUITES.values())


def get_suite(name: str) -> SuiteEntry:
    try:
        return SUITES[SUITE_ALIASES.get(name, name)]
    except KeyError:
        raise UnknownSuite(f"Unknown suite {name!r}; available: {', '.join(SUITES)}") from None


class SuiteRunner:
    """
    Runs one suite against a configuration and collects a Report.
    """

    def __init__(self, config: SuiteConfig, show_progress: bool = True, entry: Optional[SuiteEntry] = None):
        self.config = config
        self.context = VerificationContext(config)
        self.show_progress = show_progress
        self.entry = entry or get_suite(config.suite)

    def build_checks(self) -> List[Check]:
        checks = self.entry.builder(self.context)
        self.context.session_logger.info(f"Suite {self.entry.name}: {len(checks)} checks")
        return checks

    def run_check(self, check: Check) -> CheckRecord:
        """Run one check; engine errors become an error record with the message as detail."""
        self.context.current_check = check.identifier
        started = time.perf_counter()
        try:
            outcome = check.run()
            record = CheckRecord(
                identifier=check.identifier,
                status=PASS if outcome.passed else FAIL,
                residual=outcome.residual,
                detail=outcome.detail,
            )
        except AlgebraError as e:
            self.context.session_logger.warning(f"{check.identifier}: {type(e).__name__}: {e}")
            record = CheckRecord(identifier=check.identifier, status=ERROR, detail=f"{type(e).__name__}: {e}")
        except Exception as e:
            self.context.session_logger.exception(f"{check.identifier}: unexpected {type(e).__name__}")
            record = CheckRecord(identifier=check.identifier, status=ERROR, detail=f"{type(e).__name__}: {e}")
        if self.config.include_timings:
            record.duration = round(time.perf_counter() - started, 3)
        self.context.session_logger.debug(f"{check.identifier}: {record.status}")
        return record

    def run(self) -> Report:
        checks = self.build_checks()
        report = Report(suite=self.entry.name, config=self.config)
        progress = ProgressTracker(len(checks), self.entry.name, enabled=self.show_progress)
        for check in checks:
            record = report.add(self.run_check(check))
            progress.update(passed=record.passed)
        self.context.current_check = None
        self.context.session_logger.info(report.summary())
        return report


def run_suite(config: SuiteConfig, show_progress: bool = False, only: Optional[str] = None) -> Report:
    """
    Run the suite named in ``config``.

    Args:
        only: substring filter on check identifiers.

    Raises:
        UnknownSuite: the suite name is not registered.
    """
    runner = SuiteRunner(config, show_progress)
    if only is None:
        return runner.run()
    report = Report(suite=runner.entry.name, config=config)
    for check in runner.build_checks():
        if only in check.identifier:
            report.add(runner.run_check(check))
    return report
