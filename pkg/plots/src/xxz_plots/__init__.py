"""Rendering for xxz-overlap CSV data: overlap-vs-field figures with ED
markers against the closed-form line, and convergence-vs-length panels with
value tables.  Consumes the versioned CSV contract only — no physics is
recomputed here."""

from .figspec import CSV_VERSION, FigureSpec, SchemaError, load_rows
from .render import render_convergence_table, render_overlap_figure

__all__ = ["CSV_VERSION", "FigureSpec", "SchemaError", "load_rows",
           "render_overlap_figure", "render_convergence_table"]

__version__ = "0.1.0"
