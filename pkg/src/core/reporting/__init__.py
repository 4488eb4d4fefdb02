"""Report rendering for verification runs."""

from .report_writer import RENDERERS, emit_report, render_csv, render_json, render_report, render_text, report_frame

__all__ = [
    'RENDERERS',
    'emit_report',
    'render_csv',
    'render_json',
    'render_report',
    'render_text',
    'report_frame',
]
