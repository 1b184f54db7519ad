"""Render sweep CSV files into figures.

Two kinds are supported: ``lines`` draws one curve per requested column
against a shared x column (angle sweeps, or dynamics runs at a fixed
angle), and ``heatmap`` pivots three columns into a dense grid (for
example concurrence over the time-angle plane).

The renderer talks to the producing package only through its CSV
schema.  It never imports it, never writes anything except the target
image, and produces byte-identical output for identical input and spec.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import matplotlib
import numpy as np

matplotlib.use("Agg")  # headless; also pins the default style across hosts

import matplotlib.pyplot as plt

KINDS = ("lines", "heatmap")

# Scrub per-run metadata so identical inputs give identical bytes.
_METADATA = {
    ".png": {"Software": None},
    ".svg": {"Date": None},
}
_HASHSALT = "spincorr-plots"
_DPI = 150


class PlotsError(Exception):
    """Base class for all rendering errors."""


class ArgumentError(PlotsError, ValueError):
    """A spec field is outside its documented domain."""


class SchemaError(PlotsError):
    """The CSV does not provide what the spec references."""


@dataclass(frozen=True)
class PlotSpec:
    """A fully described rendering job.

    ``y`` holds one column per curve for ``lines`` and exactly the grid
    row column for ``heatmap``; ``value`` is the heatmap cell column and
    must be None for ``lines``.
    """

    csv_in: str
    kind: str
    x: str
    y: tuple[str, ...]
    out: str
    value: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArgumentError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not self.y:
            raise ArgumentError("at least one y column is required")
        if self.kind == "heatmap":
            if self.value is None:
                raise ArgumentError("heatmap requires a value column")
            if len(self.y) != 1:
                raise ArgumentError("heatmap takes exactly one y column")
        elif self.value is not None:
            raise ArgumentError("value column only applies to heatmap")

    def columns(self) -> tuple[str, ...]:
        cols = (self.x, *self.y)
        if self.value is not None:
            cols += (self.value,)
        return cols


def _read_rows(path: str) -> tuple[list[str], list[dict]]:
    try:
        with open(path, newline="") as stream:
            reader = csv.DictReader(stream)
            header = reader.fieldnames
            rows = list(reader)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    if not header:
        raise SchemaError(f"{path} has no header row")
    if not rows:
        raise SchemaError(f"{path} has no data rows")
    return list(header), rows


def _column(rows: list[dict], name: str) -> np.ndarray:
    vals = np.empty(len(rows))
    for i, row in enumerate(rows):
        cell = row[name]
        try:
            vals[i] = float(cell) if cell != "" else math.nan
        except (TypeError, ValueError):
            raise SchemaError(
                f"column {name!r} has non-numeric value {cell!r} at data row {i + 1}"
            ) from None
    return vals


def _pivot(xs: np.ndarray, ys: np.ndarray, vals: np.ndarray):
    # Rows must tile the (x, y) plane exactly once; anything else means
    # the CSV still carries extra axes and needs filtering upstream.
    ux, uy = np.unique(xs), np.unique(ys)
    grid = np.full((len(uy), len(ux)), math.nan)
    xi = np.searchsorted(ux, xs)
    yi = np.searchsorted(uy, ys)
    seen = set()
    for k in range(len(vals)):
        cell = (yi[k], xi[k])
        if cell in seen:
            raise SchemaError(
                "multiple rows map to the same (x, y) cell; "
                "the CSV has more axes than the two being plotted"
            )
        seen.add(cell)
        grid[cell] = vals[k]
    if len(seen) != grid.size:
        raise SchemaError(
            f"rows do not form a complete grid: {len(ux)} x values by "
            f"{len(uy)} y values needs {grid.size} rows, got {len(vals)}"
        )
    return ux, uy, grid


def _draw_lines(ax, spec: PlotSpec, rows: list[dict]) -> None:
    xs = _column(rows, spec.x)
    for name in spec.y:
        ax.plot(xs, _column(rows, name), label=name, linewidth=1.2)
    ax.set_xlabel(spec.x)
    ax.legend(frameon=False)
    ax.grid(alpha=0.3)


def _draw_heatmap(fig, ax, spec: PlotSpec, rows: list[dict]) -> None:
    ux, uy, grid = _pivot(
        _column(rows, spec.x), _column(rows, spec.y[0]), _column(rows, spec.value)
    )
    image = ax.imshow(
        grid,
        origin="lower",
        aspect="auto",
        extent=(ux[0], ux[-1], uy[0], uy[-1]),
        interpolation="nearest",
    )
    ax.set_xlabel(spec.x)
    ax.set_ylabel(spec.y[0])
    fig.colorbar(image, ax=ax, label=spec.value)


def render(spec: PlotSpec) -> str:
    """Render ``spec`` and return the written image path."""

    header, rows = _read_rows(spec.csv_in)
    missing = [c for c in spec.columns() if c not in header]
    if missing:
        raise SchemaError(
            f"missing column(s) {', '.join(missing)}; "
            f"available columns: {', '.join(header)}"
        )

    suffix = "." + spec.out.rsplit(".", 1)[-1].lower() if "." in spec.out else ""
    with matplotlib.rc_context({"svg.hashsalt": _HASHSALT}):
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        try:
            if spec.kind == "lines":
                _draw_lines(ax, spec, rows)
            else:
                _draw_heatmap(fig, ax, spec, rows)
            fig.tight_layout()
            try:
                fig.savefig(spec.out, dpi=_DPI, metadata=_METADATA.get(suffix))
            except OSError as exc:
                raise SchemaError(f"cannot write {spec.out}: {exc}") from None
        finally:
            plt.close(fig)
    return spec.out
