"""Command-line front end.

Single subcommand:

  render --in <csv> --kind <lines|heatmap> --x <col> --y <col>[,<col>...]
         [--value <col>] --out <img>

Exit codes: 0 ok, 2 usage, 3 bad input (missing file, missing or
non-numeric column, malformed grid).
"""

from __future__ import annotations

import argparse
import sys

from .render import KINDS, PlotsError, PlotSpec, render

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincorr-plots",
        description="Render sweep CSV files into line plots and heatmaps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    rend = sub.add_parser("render", help="render one figure from a CSV")
    rend.add_argument("--in", dest="csv_in", required=True,
                      help="input CSV in the sweep schema")
    rend.add_argument("--kind", choices=KINDS, required=True,
                      help="lines: one curve per --y column; heatmap: pivot x/y/value")
    rend.add_argument("--x", required=True, help="x-axis column")
    rend.add_argument("--y", required=True,
                      help="y column, comma-separated list for multiple curves")
    rend.add_argument("--value", default=None,
                      help="cell value column (heatmap only)")
    rend.add_argument("--out", required=True,
                      help="output image path; format follows the extension")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles -h and usage messages
        return int(exc.code or 0)

    ycols = tuple(c.strip() for c in args.y.split(",") if c.strip())
    if args.kind == "heatmap" and args.value is None:
        print("spincorr-plots render: --kind heatmap requires --value",
              file=sys.stderr)
        return EXIT_USAGE
    if args.kind == "lines" and args.value is not None:
        print("spincorr-plots render: --value only applies to --kind heatmap",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        spec = PlotSpec(
            csv_in=args.csv_in,
            kind=args.kind,
            x=args.x,
            y=ycols,
            value=args.value,
            out=args.out,
        )
        render(spec)
    except PlotsError as exc:
        print(f"spincorr-plots: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
