#!/usr/bin/env python3
"""
Superalgebra Embedding Verifier - Command Line Interface

Sub-commands:
- bracket:      compute a bracket or product in one of the four calculi
- suite:        run a named verification suite and emit its report
- list-suites:  show the registered suites
- gamma:        Γ structure table, per-variant verification, psl(2|2) checks
- schema:       print the JSON schema of reports
- config / status: user defaults and environment
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from colorama import Fore
from pydantic import ValidationError

from ..models.report import Report
from ..models.suite_config import DEFAULT_SAMPLE_ALPHAS, OUTPUT_FORMATS, SYMBOLIC, SuiteConfig
from .errors import AlgebraError
from .gamma.generators import VARIANTS
from .main import (
    BRACKET,
    CALCULI,
    PRODUCT,
    ProgressIndicator,
    compute_bracket,
    gamma_table,
    run_suite,
    setup_logging,
    verify_gamma,
    verify_psl,
    write_report,
)
from .suites.runner import SUITES, list_suites

logger = logging.getLogger(__name__)

TOOL_NAME = "Superalgebra Embedding Verifier"

# keys of the user config file that map onto SuiteConfig fields
CONFIG_KEYS = {
    'alpha': str,
    'h': str,
    'mu': str,
    'mode_range': int,
    'cutoff': int,
    'seed': int,
    'output_format': str,
    'include_timings': bool,
    'show_progress': bool,
}


class VerifierCLI:
    """CLI state: user defaults from the home directory, merged under explicit flags."""

    def __init__(self, config_file: Optional[Path] = None):
        self.config_file = config_file or Path.home() / '.superalgebra_verifier.json'
        self.config = self._load_config()

    def _defaults(self) -> Dict[str, Any]:
        return {
            'alpha': SYMBOLIC,
            'h': SYMBOLIC,
            'mu': SYMBOLIC,
            'mode_range': 3,
            'cutoff': -12,
            'seed': 0,
            'output_format': 'text',
            'include_timings': False,
            'show_progress': True,
        }

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from the user's home directory."""
        config = self._defaults()
        if self.config_file.exists():
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    config.update(json.load(f))
            except (OSError, json.JSONDecodeError) as e:
                logger.warning(f"Error loading config: {e}")
        return config

    def _save_config(self) -> None:
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=2, sort_keys=True)
            ProgressIndicator.print_success(f"Configuration saved to {self.config_file}")
        except OSError as e:
            ProgressIndicator.print_error(f"Error saving config: {e}")

    def suite_config(self, args: argparse.Namespace, suite: str = "") -> SuiteConfig:
        """Explicit flags win over the user config; pydantic validates the result."""
        values = {key: self.config[key] for key in CONFIG_KEYS if key != 'show_progress'}
        overrides = {
            'alpha': getattr(args, 'alpha', None),
            'h': getattr(args, 'h', None),
            'mu': getattr(args, 'mu', None),
            'mode_range': getattr(args, 'range', None),
            'cutoff': getattr(args, 'cutoff', None),
            'seed': getattr(args, 'seed', None),
            'output_format': getattr(args, 'format', None),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        if getattr(args, 'timings', False):
            values['include_timings'] = True
        samples = getattr(args, 'samples', None)
        values['sample_alphas'] = samples.split(',') if samples else list(DEFAULT_SAMPLE_ALPHAS)
        return SuiteConfig(suite=suite, **values)

    def show_progress(self, args: argparse.Namespace) -> bool:
        return bool(self.config.get('show_progress', True)) and not getattr(args, 'quiet', False)

    # -- sub-commands ---------------------------------------------------

    def bracket(self, args: argparse.Namespace) -> int:
        config = self.suite_config(args)
        result = compute_bracket(args.expr1, args.expr2, args.calculus, config, args.mode, args.param)
        print(result.render())
        return 0

    def suite(self, args: argparse.Namespace) -> int:
        config = self.suite_config(args, args.suite)
        report = run_suite(config, self.show_progress(args))
        write_report(report, config.output_format, args.out)
        return 0 if report.passed else 1

    def list_suites(self) -> int:
        width = max(len(name) for name in SUITES)
        for entry in list_suites():
            print(f"{entry.name.ljust(width)}  {entry.description}")
        return 0

    def schema(self) -> int:
        print(json.dumps(Report.model_json_schema(), indent=2))
        return 0

    def gamma(self, args: argparse.Namespace) -> int:
        if args.action == 'table':
            sigmas = tuple(args.sigmas.split(',')) if args.sigmas else None
            if sigmas is not None and len(sigmas) != 3:
                ProgressIndicator.print_error("--sigmas needs three comma-separated values")
                return 1
            alpha = None if args.alpha in (None, SYMBOLIC) else args.alpha
            frame = gamma_table(alpha, sigmas)
            print(frame.to_string(index=False) if len(frame) else "(abelian)")
            return 0
        config = self.suite_config(args, f"gamma-{args.action}")
        if args.action == 'verify':
            report = verify_gamma(config, args.variant, self.show_progress(args))
        else:
            report = verify_psl(config, self.show_progress(args))
        write_report(report, config.output_format, args.out)
        return 0 if report.passed else 1

    def check_status(self) -> int:
        """Check the verifier environment."""
        print(f"{Fore.CYAN}🔍 {TOOL_NAME} Status")
        print(f"{Fore.CYAN}{'='*50}")

        print(f"\n{Fore.BLUE}🐍 Python Environment:")
        print(f"{Fore.WHITE}  Version: {sys.version.split()[0]}")
        print(f"{Fore.WHITE}  Executable: {sys.executable}")

        print(f"\n{Fore.BLUE}📦 Dependencies:")
        for module_name, display_name in (('sympy', 'SymPy'), ('pandas', 'Pandas'),
                                          ('pydantic', 'Pydantic'), ('colorama', 'Colorama')):
            self._check_dependency(module_name, display_name)

        print(f"\n{Fore.BLUE}🧮 Suites: {Fore.WHITE}{len(SUITES)} registered")

        print(f"\n{Fore.BLUE}📁 Directories:")
        directory = Path('logs')
        if directory.exists():
            print(f"{Fore.GREEN}  ✅ logs/ ({len(list(directory.glob('*')))} files)")
        else:
            print(f"{Fore.YELLOW}  ⚠️ logs/ (created on first run)")

        print(f"\n{Fore.BLUE}⚙️ Configuration:")
        if self.config_file.exists():
            print(f"{Fore.GREEN}  ✅ Config file: {self.config_file}")
        else:
            print(f"{Fore.YELLOW}  ⚠️ No configuration file found, using defaults")
        for key, value in self.config.items():
            print(f"{Fore.WHITE}    {key}: {value}")
        return 0

    def _check_dependency(self, module_name: str, display_name: str) -> bool:
        try:
            module = __import__(module_name)
        except ImportError:
            print(f"{Fore.RED}  ❌ {display_name} (not installed)")
            return False
        version = getattr(module, '__version__', 'unknown')
        print(f"{Fore.GREEN}  ✅ {display_name} ({version})")
        return True

    def configure(self, key: Optional[str] = None, value: Optional[str] = None) -> int:
        """Show or set user defaults."""
        if key is None:
            print(f"{Fore.CYAN}⚙️ Current Configuration:")
            print(f"{Fore.CYAN}{'='*40}")
            for k, v in self.config.items():
                print(f"{Fore.WHITE}  {k}: {Fore.YELLOW}{v}")
            print(f"\n{Fore.BLUE}💡 To modify: python -m src.core config <key> <value>")
            return 0

        if key not in CONFIG_KEYS:
            ProgressIndicator.print_error(f"Configuration key '{key}' not found")
            return 1

        if value is None:
            print(f"{Fore.WHITE}{key}: {Fore.YELLOW}{self.config.get(key)}")
            return 0

        kind = CONFIG_KEYS[key]
        if kind is bool:
            converted: Any = value.lower() in ('true', '1', 'yes', 'on')
        elif kind is int:
            try:
                converted = int(value)
            except ValueError:
                ProgressIndicator.print_error(f"Invalid integer: {value}")
                return 1
        else:
            converted = value

        old_value = self.config.get(key, 'not set')
        candidate = dict(self.config, **{key: converted})
        try:
            SuiteConfig(**{k: v for k, v in candidate.items() if k != 'show_progress'})
        except ValidationError as e:
            ProgressIndicator.print_error(f"Invalid value for {key}: {e.errors()[0]['msg']}")
            return 1
        self.config = candidate
        self._save_config()
        ProgressIndicator.print_success(f"Updated {key}: {old_value} → {converted}")
        return 0


def _add_parameter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", help="alpha: 'symbolic' or a rational such as 1/2")
    parser.add_argument("--h", help="deformation parameter h: 'symbolic' or a rational")
    parser.add_argument("--mu", help="V^mu parameter: 'symbolic' or a rational")
    parser.add_argument("--range", type=int, help="check modes |n| <= RANGE (default 3)")
    parser.add_argument("--cutoff", type=int, help="lowest tau exponent kept (default -12)")
    parser.add_argument("--seed", type=int, help="seed for sampled checks")


def _add_report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="report format (default text)")
    parser.add_argument("--out", help="write the report to this file instead of stdout")
    parser.add_argument("--timings", action="store_true", help="include per-check durations")
    parser.add_argument("--samples", help="comma-separated numeric alpha samples (default 0,1,-1,2,1/2)")
    parser.add_argument("--quiet", action="store_true", help="no progress bar")


def create_cli() -> argparse.ArgumentParser:
    """Create the CLI parser."""
    parser = argparse.ArgumentParser(
        description=f"{TOOL_NAME} - exact checks of D(2,1;alpha) embeddings",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Brackets
  python -m src.core bracket "t y1" "t x1" --calculus poisson      # t^2
  python -m src.core bracket tau t --calculus circ_h               # h
  python -m src.core bracket d t --calculus weyl                   # t d + t

  # Verification suites
  python -m src.core list-suites
  python -m src.core suite gamma-thm41
  python -m src.core suite cocycles --range 3 --format json --out reports/cocycles.json
  python -m src.core --suite psl --alpha 1

  # Gamma
  python -m src.core gamma table --alpha 1/2
  python -m src.core gamma verify --variant matrix
  python -m src.core gamma psl

  # Environment
  python -m src.core status
  python -m src.core config cutoff -16
        """
    )
    parser.add_argument("--suite", dest="suite_shortcut", help="shortcut for 'suite SUITE'")
    _add_parameter_flags(parser)
    _add_report_flags(parser)

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    bracket_parser = subparsers.add_parser("bracket", help="Compute a bracket or product")
    bracket_parser.add_argument("expr1", help="first expression")
    bracket_parser.add_argument("expr2", help="second expression")
    bracket_parser.add_argument("--calculus", choices=CALCULI, default="poisson", help="calculus (default poisson)")
    bracket_parser.add_argument("--mode", choices=[BRACKET, PRODUCT],
                                help="bracket or product (default: product for weyl, bracket otherwise)")
    bracket_parser.add_argument("--param", action="append", default=[], metavar="NAME",
                                help="declare an extra formal parameter (repeatable)")
    _add_parameter_flags(bracket_parser)

    suite_parser = subparsers.add_parser("suite", help="Run a verification suite")
    suite_parser.add_argument("suite", help="suite name (see list-suites)")
    _add_parameter_flags(suite_parser)
    _add_report_flags(suite_parser)

    subparsers.add_parser("list-suites", help="List verification suites")
    subparsers.add_parser("schema", help="Print the report JSON schema")
    subparsers.add_parser("status", help="Check environment status")

    config_parser = subparsers.add_parser("config", help="Manage user defaults")
    config_parser.add_argument("key", nargs="?", help="Configuration key")
    config_parser.add_argument("value", nargs="?", help="Configuration value")

    gamma_parser = subparsers.add_parser("gamma", help="Gamma(sigma1, sigma2, sigma3) tools")
    gamma_parser.add_argument("action", choices=["table", "verify", "psl"], help="what to do")
    gamma_parser.add_argument("--variant", choices=VARIANTS, default="poisson", help="generator variant to verify")
    gamma_parser.add_argument("--sigmas", help="table of Gamma(s1,s2,s3) instead of the alpha family, e.g. 1,1,-2")
    _add_parameter_flags(gamma_parser)
    _add_report_flags(gamma_parser)

    return parser


def _merge_global_flags(args: argparse.Namespace, parser: argparse.ArgumentParser) -> argparse.Namespace:
    """Let ``--suite NAME`` stand in for the suite sub-command."""
    if args.command is None:
        if not args.suite_shortcut:
            parser.error("a command is required (or --suite NAME)")
        args.command = "suite"
        args.suite = args.suite_shortcut
    return args


def dispatch(cli: VerifierCLI, args: argparse.Namespace) -> int:
    if args.command == "bracket":
        return cli.bracket(args)
    elif args.command == "suite":
        return cli.suite(args)
    elif args.command == "list-suites":
        return cli.list_suites()
    elif args.command == "schema":
        return cli.schema()
    elif args.command == "status":
        return cli.check_status()
    elif args.command == "config":
        return cli.configure(args.key, args.value)
    elif args.command == "gamma":
        return cli.gamma(args)
    raise ValueError(f"Unknown command {args.command}")


def main(argv: Optional[list] = None) -> None:
    """Main CLI entry point; exits 0 iff everything requested passed."""
    parser = create_cli()
    args = _merge_global_flags(parser.parse_args(argv), parser)

    if args.command in ("suite", "gamma"):
        setup_logging(args.command)
        print(f"{Fore.MAGENTA}{'='*70}", file=sys.stderr)
        print(f"{Fore.MAGENTA}🧮 {TOOL_NAME} v1.0", file=sys.stderr)
        print(f"{Fore.MAGENTA}   Exact superalgebra computations", file=sys.stderr)
        print(f"{Fore.MAGENTA}{'='*70}", file=sys.stderr)

    cli = VerifierCLI()

    try:
        code = dispatch(cli, args)
    except KeyboardInterrupt:
        print(f"\n{Fore.YELLOW}👋 Interrupted by user", file=sys.stderr)
        sys.exit(0)
    except (AlgebraError, ValidationError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        ProgressIndicator.print_error(f"{type(e).__name__}: {e}")
        sys.exit(1)
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        print(f"\n{Fore.RED}❌ Unexpected error: {e}", file=sys.stderr)
        print(f"{Fore.YELLOW}💡 Run 'python -m src.core status' to check your environment", file=sys.stderr)
        sys.exit(1)
    sys.exit(code)


if __name__ == "__main__":
    main()
