#!/usr/bin/env python3
"""
Check primitives shared by the suite modules.
"""

from dataclasses import dataclass
from typing import Callable, Iterable, List

MAX_LISTED = 3


@dataclass
class CheckOutcome:
    """Result of one check: verdict plus a canonical residual rendering."""

    passed: bool
    residual: str = ""
    detail: str = ""


@dataclass
class Check:
    """A named, deferred check; ``run`` does the work."""

    identifier: str
    run: Callable[[], CheckOutcome]


def render(problems: Iterable) -> str:
    """First few problems joined deterministically, with a count of the rest."""
    items: List[str] = [str(problem) for problem in problems]
    text = "; ".join(items[:MAX_LISTED])
    if len(items) > MAX_LISTED:
        text += f"; (+{len(items) - MAX_LISTED} more)"
    return text


def from_failures(failures, detail: str = "") -> CheckOutcome:
    """Pass iff ``failures`` is empty."""
    failures = list(failures)
    if failures:
        return CheckOutcome(False, render(failures), detail or f"{len(failures)} failures")
    return CheckOutcome(True, "", detail)


def expect(condition: bool, residual: str = "", detail: str = "") -> CheckOutcome:
    return CheckOutcome(bool(condition), "" if condition else residual, detail)


def expect_failure(failures, detail: str = "") -> CheckOutcome:
    """Mutation control: passes only when the check under test reports problems."""
    failures = list(failures)
    if failures:
        return CheckOutcome(True, "", detail or f"control detected {len(failures)} failures")
    return CheckOutcome(False, "control passed unexpectedly", detail)


def alpha_tag(alpha) -> str:
    return "symbolic" if alpha.depends_on("alpha") else str(alpha)
