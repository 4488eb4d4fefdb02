#!/usr/bin/env python3
"""
Progress tracking for long verification suites.

The bar goes to stderr by default so reports on stdout stay machine-readable.
"""

import sys
import time
from typing import Optional, TextIO

from colorama import Fore, Style

BAR_LENGTH = 40


class ProgressTracker:
    """
    Terminal progress bar over the checks of a suite.

    Failed checks are counted as they happen and shown in red next to the
    counter, so a long run signals trouble before its report is written.
    """

    def __init__(self, total: int, description: str = "Progress", stream: Optional[TextIO] = None,
                 enabled: bool = True):
        self.total = total
        self.current = 0
        self.failed = 0
        self.description = description
        self.stream = stream or sys.stderr
        self.enabled = enabled
        self.start_time = time.time()

    def update(self, increment: int = 1, description: Optional[str] = None, passed: bool = True):
        """Advance the bar by ``increment`` checks; ``passed=False`` counts them as failed."""
        self.current += increment
        if not passed:
            self.failed += increment
        if description:
            self.description = description
        self._draw()

    def _eta(self) -> str:
        if not self.current:
            return ""
        eta = (time.time() - self.start_time) / self.current * (self.total - self.current)
        return f" ETA: {int(eta)}s" if eta > 1 else ""

    def _draw(self):
        if not self.enabled or self.total == 0:
            return

        filled = BAR_LENGTH * min(self.current, self.total) // self.total
        bar = '█' * filled + '░' * (BAR_LENGTH - filled)
        percent = self.current / self.total * 100
        failures = f" {Fore.RED}✗ {self.failed}{Style.RESET_ALL}" if self.failed else ""

        self.stream.write(f"\r{self.description}: |{bar}| {self.current}/{self.total} "
                          f"({percent:.1f}%){failures}{self._eta()}")
        if self.current >= self.total:
            self.stream.write("\n")
        self.stream.flush()

    def finish(self, description: str = "Complete"):
        self.current = self.total
        self.description = description
        self._draw()
