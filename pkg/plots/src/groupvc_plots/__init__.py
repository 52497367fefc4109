"""Static figure generation for groupvc experiment CSV output."""

from .figures import PlotSpec, plot_histogram, plot_lln_trend, plot_residue_ratio, render
from .records import Row, SchemaError, load_rows, mean_sd

__all__ = [
    "PlotSpec",
    "Row",
    "SchemaError",
    "load_rows",
    "mean_sd",
    "plot_histogram",
    "plot_lln_trend",
    "plot_residue_ratio",
    "render",
]
