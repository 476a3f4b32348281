#!/usr/bin/env python3
"""Render line plots from solver CSV output.

Reads one or two CSV files in the solver's output format (header row
``x,<name>,...`` followed by one row per cell) and writes a PNG line plot of
the requested column against x. With a second input the two curves are
overlaid with a legend, which is how scheme-comparison figures are produced.

Usage:
    plot.py --in a.csv [--in2 b.csv] --col u --out fig.png \
            [--label1 FDS-J --label2 LLF] [--logy] [--title TEXT]

The density spike in delta-shock runs grows with grid refinement, so --logy
is available to keep refined runs readable on one axis.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


@dataclass(frozen=True)
class PlotSpec:
    inputs: tuple
    component: str
    labels: tuple
    output_path: str
    title: str = ""
    logy: bool = False


@dataclass(frozen=True)
class Series:
    x: list
    y: list
    columns: tuple = field(compare=False, default=())


class PlotError(Exception):
    """Raised for malformed or incomplete CSV input."""


def read_series(path: str, column: str) -> Series:
    """Load the x column and one named column from a solver CSV."""
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    if not rows or not rows[0]:
        raise PlotError(f"{path}: empty CSV")
    header = rows[0]
    if column not in header:
        raise PlotError(
            f"{path}: no column {column!r}; available columns: {','.join(header)}"
        )
    xi, yi = header.index("x"), header.index(column)
    try:
        x = [float(r[xi]) for r in rows[1:]]
        y = [float(r[yi]) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise PlotError(f"{path}: malformed data row ({exc})") from exc
    if not x:
        raise PlotError(f"{path}: no data rows")
    return Series(x, y, tuple(header))


def plot(spec: PlotSpec) -> None:
    """Write the PNG described by spec; raises PlotError on bad input."""
    series = [read_series(p, spec.component) for p in spec.inputs]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    styles = ("-", "--")
    for s, label, style in zip(series, spec.labels, styles):
        ax.plot(s.x, s.y, style, linewidth=1.2, label=label)
    ax.set_xlabel("x")
    ax.set_ylabel(spec.component)
    if spec.logy:
        ax.set_yscale("log")
    if spec.title:
        ax.set_title(spec.title)
    if len(series) > 1:
        ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_path, dpi=110)
    plt.close(fig)


def parse_args(argv=None) -> PlotSpec:
    parser = argparse.ArgumentParser(
        prog="plot.py", description="Plot one column of solver CSV output."
    )
    parser.add_argument("--in", dest="in1", required=True, help="primary CSV file")
    parser.add_argument("--in2", help="optional second CSV to overlay")
    parser.add_argument("--col", required=True, help="column name to plot")
    parser.add_argument("--out", required=True, help="output PNG path")
    parser.add_argument("--label1", default="run 1", help="legend label for --in")
    parser.add_argument("--label2", default="run 2", help="legend label for --in2")
    parser.add_argument("--logy", action="store_true", help="logarithmic y axis")
    parser.add_argument("--title", default="", help="figure title")
    args = parser.parse_args(argv)
    inputs = (args.in1,) if args.in2 is None else (args.in1, args.in2)
    labels = (args.label1, args.label2)[: len(inputs)]
    return PlotSpec(inputs, args.col, labels, args.out, args.title, args.logy)


def main(argv=None) -> int:
    spec = parse_args(argv)
    try:
        plot(spec)
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
