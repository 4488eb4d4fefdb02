#!/usr/bin/env python3
"""
Run configuration for verification suites and bracket computations.
"""

from fractions import Fraction
from typing import Dict, List, Optional
import json

from pydantic import BaseModel, Field, field_validator, model_validator

SYMBOLIC = "symbolic"
OUTPUT_FORMATS = ['text', 'json', 'csv']
DEFAULT_SAMPLE_ALPHAS = ['0', '1', '-1', '2', '1/2']

# deepest exact tau exponent among the generators compared on a truncation window (tau^-1)
DEEPEST_EXACT_TAU = -1
# tau orders a suite run must keep below it
MIN_WINDOW_DEPTH = 8


def _check_rational(value: str) -> str:
    text = str(value).strip()
    if text.lower() in (SYMBOLIC, 'formal'):
        return SYMBOLIC
    try:
        number = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f'expected "symbolic" or a rational such as 1/2, got {value!r}')
    return str(number)


class SuiteConfig(BaseModel):
    """Everything a suite run depends on; identical configs give identical reports."""

    suite: str = Field(default="", description="Suite name (see list-suites)")
    alpha: str = Field(default=SYMBOLIC, description="Value of alpha: 'symbolic' or a rational")
    h: str = Field(default=SYMBOLIC, description="Value of the deformation parameter h")
    mu: str = Field(default=SYMBOLIC, description="Value of the V^mu parameter mu")
    mode_range: int = Field(default=3, description="Modes n with |n| <= mode_range are checked")
    cutoff: int = Field(default=-12, description="Lowest tau exponent kept by truncated products")
    seed: int = Field(default=0, description="Seed for sampled checks")
    output_format: str = Field(default="text", description="Report format (text, json, csv)")
    sample_alphas: List[str] = Field(default_factory=lambda: list(DEFAULT_SAMPLE_ALPHAS),
                                     description="Numeric alpha values repeated after the symbolic run")
    variant: Optional[str] = Field(None, description="Generator variant for gamma verification")
    include_timings: bool = Field(default=False, description="Emit per-check durations")

    @field_validator('alpha', 'h', 'mu')
    @classmethod
    def validate_parameter(cls, v):
        return _check_rational(v)

    @field_validator('sample_alphas')
    @classmethod
    def validate_samples(cls, v):
        values = [_check_rational(item) for item in v]
        if SYMBOLIC in values:
            raise ValueError('sample_alphas must be numeric')
        return values

    @field_validator('mode_range')
    @classmethod
    def validate_mode_range(cls, v):
        if v < 1:
            raise ValueError('mode_range must be at least 1')
        return v

    @field_validator('cutoff')
    @classmethod
    def validate_cutoff(cls, v):
        if v > -4:
            raise ValueError('cutoff must be -4 or lower')
        return v

    @field_validator('output_format')
    @classmethod
    def validate_output_format(cls, v):
        if v not in OUTPUT_FORMATS:
            raise ValueError('output_format must be one of: text, json, csv')
        return v

    @model_validator(mode='after')
    def validate_window_depth(self):
        # bracket computations may cut shallower; suite verdicts may not
        if self.suite and self.window_depth < MIN_WINDOW_DEPTH:
            raise ValueError(
                f'cutoff {self.cutoff} leaves a window of {self.window_depth} tau orders below '
                f'tau^{DEEPEST_EXACT_TAU}; suite runs need at least {MIN_WINDOW_DEPTH} '
                f'(cutoff {DEEPEST_EXACT_TAU - MIN_WINDOW_DEPTH} or lower)'
            )
        return self

    @property
    def window_depth(self) -> int:
        """Tau orders kept below the deepest exact term of the compared generators."""
        return DEEPEST_EXACT_TAU - self.cutoff

    def value_of(self, name: str) -> Optional[Fraction]:
        """Numeric value of alpha/h/mu, or None when symbolic."""
        text = getattr(self, name)
        return None if text == SYMBOLIC else Fraction(text)

    def assignment(self) -> Dict[str, Fraction]:
        """Numeric parameters as an evaluation assignment."""
        return {name: value for name in ('alpha', 'h', 'mu')
                if (value := self.value_of(name)) is not None}

    def sample_values(self) -> List[Fraction]:
        return [Fraction(item) for item in self.sample_alphas]

    def to_json(self, indent: int = 2) -> str:
        """Export config to JSON string."""
        return self.model_dump_json(indent=indent)

    def save_to_file(self, filepath: str) -> None:
        """Save config to JSON file."""
        with open(filepath, 'w', encoding='utf-8') as f:
            f.write(self.to_json())

    @classmethod
    def load_from_file(cls, filepath: str) -> 'SuiteConfig':
        """Load config from JSON file."""
        with open(filepath, 'r', encoding='utf-8') as f:
            data = json.load(f)
        return cls(**data)
