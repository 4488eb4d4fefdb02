"""Utility modules for verification runs."""

from .progress import ProgressTracker

__all__ = ['ProgressTracker']
