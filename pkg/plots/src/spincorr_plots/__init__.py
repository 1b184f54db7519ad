"""Figure rendering for sweep CSV files: line plots and heatmaps."""

from .render import KINDS, ArgumentError, PlotsError, PlotSpec, SchemaError, render

__all__ = [
    "KINDS",
    "ArgumentError",
    "PlotsError",
    "PlotSpec",
    "SchemaError",
    "render",
]
