#!/usr/bin/env python3
"""
Report rendering: aligned text table, CSV and versioned JSON.

Renderings depend only on the Report, so identical configurations give
byte-identical output.
"""

import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

import pandas as pd

from ...models.report import Report
from ..errors import IOFailure

logger = logging.getLogger(__name__)

COLUMNS = ['identifier', 'status', 'residual', 'detail']


def report_frame(report: Report) -> pd.DataFrame:
    """One row per check in execution order; durations only when timings are enabled."""
    columns = list(COLUMNS)
    if report.config.include_timings:
        columns.append('duration')
    rows = []
    for check in report.checks:
        row = {name: getattr(check, name) for name in columns}
        for name in ('residual', 'detail'):
            row[name] = ' / '.join(line.strip() for line in row[name].splitlines())
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def _header(report: Report) -> List[str]:
    config = report.config
    return [
        f"Suite:   {report.suite}",
        f"Verdict: {report.verdict.upper()}  ({report.summary()})",
        f"Params:  alpha={config.alpha} h={config.h} mu={config.mu} "
        f"range={config.mode_range} cutoff={config.cutoff} seed={config.seed}",
        f"Schema:  {report.schema_version}  tool {report.tool_version}",
    ]


def render_text(report: Report) -> str:
    frame = report_frame(report)
    body = frame.to_string(index=False, justify='left') if len(frame) else "(no checks)"
    return "\n".join(_header(report) + ["", body]) + "\n"


def render_csv(report: Report) -> str:
    return report_frame(report).to_csv(index=False, lineterminator='\n')


def render_json(report: Report) -> str:
    return report.to_json() + "\n"


RENDERERS: Dict[str, Callable[[Report], str]] = {
    'text': render_text,
    'csv': render_csv,
    'json': render_json,
}


def render_report(report: Report, output_format: str = 'text') -> str:
    try:
        renderer = RENDERERS[output_format]
    except KeyError:
        raise ValueError(f"Unknown report format {output_format!r}; expected one of {', '.join(RENDERERS)}") from None
    return renderer(report)


def emit_report(report: Report, output_format: str = 'text', out: Optional[str] = None,
                stream: Optional[TextIO] = None) -> bytes:
    """
    Render ``report`` and write it to ``out`` (a file path) or ``stream``.

    Returns:
        The UTF-8 bytes that were written.

    Raises:
        IOFailure: the file or stream could not be written.
    """
    text = render_report(report, output_format)
    data = text.encode('utf-8')
    try:
        if out:
            path = Path(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(data)
            logger.info(f"Report written to {path}")
        else:
            target = stream or sys.stdout
            target.write(text)
            target.flush()
    except OSError as e:
        raise IOFailure(f"Cannot write report to {out or 'stream'}: {e}") from e
    return data
