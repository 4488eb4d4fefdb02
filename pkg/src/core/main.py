#!/usr/bin/env python3
"""
Superalgebra Embedding Verifier - Main Entry Points

Logging setup, console indicators and the operations behind the CLI:
bracket computation in the four calculi, suite runs, Γ tables and reports.
"""

import logging
import sys
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Tuple

import pandas as pd
from colorama import Fore, init

from ..models.report import Report
from ..models.suite_config import SuiteConfig
from .arithmetic.term_map import TermMap
from .context import VerificationContext
from .contact.superfunction import SuperFunction, contact_bracket
from .errors import UnknownVariant
from .gamma.gamma_algebra import build_gamma, gamma_for_alpha
from .gamma.generators import VARIANTS
from .notation.expression_parser import parse_coefficient, parse_superfunction, parse_symbol, parse_weyl
from .reporting.report_writer import emit_report
from .suites.checks import Check, alpha_tag
from .suites.gamma_suites import generation_outcome, hom_outcome, psl as psl_checks, relations_outcome
from .suites.runner import SuiteEntry, SuiteRunner
from .symbols.psymbol import PSymbol, circ_h, poisson_bracket, super_commutator_h, supercommutative_mul
from .weyl.weyl_algebra import weyl_commutator, weyl_mul

init(autoreset=True)

logger = logging.getLogger(__name__)


def setup_logging(session_type: str = "general", logs_dir: str = "logs") -> logging.Logger:
    """Dual logging: bare warnings on the console, everything in a per-session file."""
    directory = Path(logs_dir)
    directory.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_filename = f"{session_type}_{timestamp}.log"

    file_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    console_formatter = logging.Formatter('%(message)s')

    file_handler = logging.FileHandler(directory / log_filename)
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(file_formatter)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.WARNING)
    console_handler.setFormatter(console_formatter)

    print(f"📋 Debug logging to: {directory / log_filename}", file=sys.stderr)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    root_logger.handlers.clear()
    root_logger.addHandler(file_handler)
    root_logger.addHandler(console_handler)

    for logger_name in ('sympy', 'matplotlib', 'asyncio'):
        logging.getLogger(logger_name).setLevel(logging.WARNING)

    return logging.getLogger(__name__)


class ProgressIndicator:
    """Colored status lines on stderr; stdout is reserved for results."""

    @staticmethod
    def print_header(title: str):
        print(f"\n{Fore.MAGENTA}{'='*60}", file=sys.stderr)
        print(f"{Fore.MAGENTA}🧮 {title}", file=sys.stderr)
        print(f"{Fore.MAGENTA}{'='*60}", file=sys.stderr)

    @staticmethod
    def print_step(step: str, details: str = ""):
        if details:
            print(f"{Fore.CYAN}▶ {step}: {Fore.WHITE}{details}", file=sys.stderr)
        else:
            print(f"{Fore.CYAN}▶ {step}", file=sys.stderr)

    @staticmethod
    def print_success(message: str):
        print(f"{Fore.GREEN}✅ {message}", file=sys.stderr)

    @staticmethod
    def print_error(message: str):
        print(f"{Fore.RED}❌ {message}", file=sys.stderr)

    @staticmethod
    def print_warning(message: str):
        print(f"{Fore.YELLOW}⚠️  {message}", file=sys.stderr)

    @staticmethod
    def print_info(message: str):
        print(f"{Fore.BLUE}ℹ️  {message}", file=sys.stderr)

    @staticmethod
    def print_result(filepath: str, file_type: str = "file"):
        print(f"{Fore.GREEN}📁 {file_type.title()} saved: {Fore.WHITE}{filepath}", file=sys.stderr)


# ----------------------------------------------------------------------
# brackets
# ----------------------------------------------------------------------

BRACKET, PRODUCT = "bracket", "product"
CALCULI: Tuple[str, ...] = ("poisson", "circ_h", "contact", "weyl")

# calculus -> (parser, {mode: operation})
_OPERATIONS: Dict[str, Tuple[Callable[..., TermMap], Dict[str, Callable]]] = {
    "poisson": (parse_symbol, {BRACKET: poisson_bracket, PRODUCT: supercommutative_mul}),
    "circ_h": (parse_symbol, {BRACKET: super_commutator_h, PRODUCT: circ_h}),
    "contact": (parse_superfunction, {BRACKET: contact_bracket, PRODUCT: SuperFunction.__mul__}),
    "weyl": (parse_weyl, {BRACKET: weyl_commutator, PRODUCT: weyl_mul}),
}

# the Weyl calculus is mostly used to normal-order products such as d t
DEFAULT_MODES = {"poisson": BRACKET, "circ_h": BRACKET, "contact": BRACKET, "weyl": PRODUCT}


@dataclass
class BracketResult:
    """Canonical text of a bracket together with its exactness."""

    value: TermMap
    calculus: str
    mode: str

    @property
    def exact(self) -> bool:
        return not isinstance(self.value, PSymbol) or self.value.is_exact

    @property
    def text(self) -> str:
        return str(self.value)

    def render(self) -> str:
        flag = "exact" if self.exact else f"truncated below tau^{self.value.truncation}"
        return f"{self.text}    [{flag}]"


def compute_bracket(expr1: str, expr2: str, calculus: str = "poisson",
                    config: Optional[SuiteConfig] = None, mode: Optional[str] = None,
                    parameters: Sequence[str] = ()) -> BracketResult:
    """
    Parse two expressions in the grammar of ``calculus`` and combine them.

    Numeric alpha, h and mu from ``config`` are substituted into the result;
    ``cutoff`` bounds the ∘_h expansion. ``parameters`` names extra formal
    parameters the expressions may use.

    Raises:
        ParseError: malformed input (with position).
        MixedParity: a bracket operand is not homogeneous.
        UnknownVariant: unknown calculus or mode.
    """
    config = config or SuiteConfig()
    if calculus not in _OPERATIONS:
        raise UnknownVariant(f"Unknown calculus {calculus!r}; expected one of {', '.join(CALCULI)}")
    mode = mode or DEFAULT_MODES[calculus]
    parser, operations = _OPERATIONS[calculus]
    if mode not in operations:
        raise UnknownVariant(f"Unknown mode {mode!r}; expected '{BRACKET}' or '{PRODUCT}'")
    a, b = parser(expr1, parameters=parameters), parser(expr2, parameters=parameters)
    operation = operations[mode]
    if calculus == "circ_h":
        value = operation(a, b, config.cutoff)
    else:
        value = operation(a, b)
    context = VerificationContext(config)
    value = value.evaluate(context.assignment())
    logger.info(f"{calculus} {mode} of '{expr1}' and '{expr2}' = {value}")
    return BracketResult(value, calculus, mode)


# ----------------------------------------------------------------------
# suites and reports
# ----------------------------------------------------------------------

def run_suite(config: SuiteConfig, show_progress: bool = True) -> Report:
    """Run the configured suite with console progress."""
    ProgressIndicator.print_header(f"Suite {config.suite}")
    ProgressIndicator.print_step("Parameters", f"alpha={config.alpha} h={config.h} mu={config.mu}")
    ProgressIndicator.print_step("Window", f"|n| <= {config.mode_range}, cutoff {config.cutoff}")
    report = SuiteRunner(config, show_progress).run()
    _announce(report)
    return report


def _announce(report: Report) -> None:
    if report.passed:
        ProgressIndicator.print_success(report.summary())
    else:
        ProgressIndicator.print_error(report.summary())
        for record in report.failures()[:5]:
            print(f"{Fore.RED}   • {record.identifier} [{record.status}]", file=sys.stderr)


def write_report(report: Report, output_format: str = "text", out: Optional[str] = None) -> bytes:
    data = emit_report(report, output_format, out)
    if out:
        ProgressIndicator.print_result(out, "Report")
    return data


# ----------------------------------------------------------------------
# Γ helpers
# ----------------------------------------------------------------------

def gamma_table(alpha: Optional[str] = None, sigmas: Optional[Tuple[str, str, str]] = None) -> pd.DataFrame:
    """Non-zero structure constants of Γ(σ1, σ2, σ3), or of Γ(2, -1-α, α-1)."""
    if sigmas is not None:
        algebra = build_gamma(*(parse_coefficient(value) for value in sigmas))
    else:
        algebra = gamma_for_alpha(parse_coefficient(alpha or "alpha"))
    rows = [{'a': a, 'b': b, 'bracket': str(value)} for (a, b), value in algebra.structure_table().items()]
    return pd.DataFrame(rows, columns=['a', 'b', 'bracket'])


def verify_gamma(config: SuiteConfig, variant: str, show_progress: bool = True) -> Report:
    """Homomorphism, generation and relation checks for one generator variant."""
    if variant not in VARIANTS:
        raise UnknownVariant(f"Unknown generator variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    context = VerificationContext(config)
    alpha, cutoff = context.alpha, config.cutoff
    tag = alpha_tag(alpha)

    def builder(_context):
        return [
            Check(f"hom[{variant}]@alpha={tag}", lambda: hom_outcome(variant, alpha, cutoff)),
            Check(f"generate[{variant}]@alpha={tag}", lambda: generation_outcome(variant, alpha, cutoff)),
            Check(f"relations[{variant}]@alpha={tag}", lambda: relations_outcome(variant, alpha, cutoff)),
        ]

    entry = SuiteEntry(f"gamma-verify[{variant}]", "Checks for one generator variant", builder)
    report = SuiteRunner(config, show_progress, entry=entry).run()
    _announce(report)
    return report


def verify_psl(config: SuiteConfig, show_progress: bool = True) -> Report:
    entry = SuiteEntry("gamma-psl", "psl(2|2) degenerations", psl_checks)
    report = SuiteRunner(config, show_progress, entry=entry).run()
    _announce(report)
    return report
