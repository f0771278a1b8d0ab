"""Simplicial Lines text renderers."""

from .analysis_view import render_analysis
from .certificate_view import render_certificate
from .suite_table import render_suites

__all__ = ["render_analysis", "render_certificate", "render_suites"]
