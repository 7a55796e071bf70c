"""Scatter plots of real spectral branches over the sweep parameter.

The reader is strict about the file (header must match the curve CSV
contract) and tolerant about rows: a malformed row is skipped with a
warning and counted, so one bad sample never hides a whole sweep.  The
renderer is read-only over its input and plots one point per real value,
so the plotted point count always equals the sum of the ``real_count``
column over the rows that parsed.
"""

from __future__ import annotations

import argparse
import csv
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

from matplotlib.figure import Figure


class CurveFormatError(ValueError):
    """The file does not follow the curve CSV contract."""


@dataclass(frozen=True)
class CurveFigureSpec:
    """One figure: which CSV to read, how to label it, where to write."""

    csv_path: str
    out_path: str
    title: str = ""
    xlabel: str = "a"
    ylabel: str = "lambda"
    marker_size: float = 4.0


@dataclass(frozen=True)
class CurveData:
    """Parsed sweep: one (a, lambda) point per real value per row."""

    points: tuple[tuple[float, float], ...]
    rows: int
    skipped_rows: int
    failed_samples: int


@dataclass(frozen=True)
class RenderReport:
    out_path: str
    points_plotted: int
    rows: int
    skipped_rows: int
    failed_samples: int


def _parse_row(cells: list[str], width: int) -> tuple[float, int, list[float]]:
    if len(cells) != width:
        raise ValueError(f"expected {width} cells, got {len(cells)}")
    a = float(cells[0])
    int(cells[1])  # degree: must parse, value not needed for plotting
    count = int(cells[2])
    if count < -1:
        raise ValueError(f"real_count {count} out of range")
    if count == -1:
        if any(c.strip() for c in cells[3:]):
            raise ValueError("failed sample with populated value cells")
        return a, -1, []
    filled = [c for c in cells[3:] if c.strip()]
    if len(filled) != count:
        raise ValueError(f"real_count {count} but {len(filled)} value cells")
    lams = [float(c) for c in filled]
    if any(y < x for x, y in zip(lams, lams[1:])):
        raise ValueError("values not ascending")
    return a, count, lams


def read_curve_csv(path: str | Path) -> CurveData:
    """Parse a sweep CSV; bad rows are skipped with a warning and counted.

    Raises :class:`CurveFormatError` when the file itself is unusable
    (missing, empty, or a header that does not match the contract).
    """
    try:
        with open(path, newline="", encoding="ascii") as fh:
            table = list(csv.reader(fh))
    except (OSError, UnicodeDecodeError, csv.Error) as exc:
        raise CurveFormatError(f"cannot read {path}: {exc}") from exc
    if not table:
        raise CurveFormatError(f"{path} is empty (not even a header)")
    header = table[0]
    want = ["a", "degree", "real_count"]
    lambdas = [f"lambda_{i + 1}" for i in range(len(header) - 3)]
    if header[:3] != want or header[3:] != lambdas:
        raise CurveFormatError(f"{path} header {header!r} does not match "
                               "a,degree,real_count,lambda_1..lambda_D")
    points: list[tuple[float, float]] = []
    skipped = failed = 0
    for lineno, cells in enumerate(table[1:], start=2):
        try:
            a, count, lams = _parse_row(cells, len(header))
        except ValueError as exc:
            warnings.warn(f"{path}:{lineno}: skipping malformed row ({exc})")
            skipped += 1
            continue
        if count == -1:
            failed += 1
            continue
        points.extend((a, lam) for lam in lams)
    return CurveData(
        points=tuple(points),
        rows=len(table) - 1,
        skipped_rows=skipped,
        failed_samples=failed,
    )


def render(spec: CurveFigureSpec) -> RenderReport:
    """Draw the sweep as a scatter figure and write it to ``spec.out_path``.

    The reported ``points_plotted`` is taken from the scatter artist
    itself, so it certifies what actually landed in the figure.
    """
    data = read_curve_csv(spec.csv_path)
    fig = Figure(figsize=(8, 5))
    ax = fig.add_subplot()
    if data.points:
        xs, ys = zip(*data.points)
    else:
        xs, ys = (), ()
        warnings.warn(f"{spec.csv_path}: no plottable points, writing "
                      "empty axes")
    artist = ax.scatter(xs, ys, s=spec.marker_size, color="#1f4e9c",
                        linewidths=0)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    ax.grid(True, alpha=0.25)
    fig.tight_layout()
    fig.savefig(spec.out_path)
    return RenderReport(
        out_path=str(spec.out_path),
        points_plotted=len(artist.get_offsets()),
        rows=data.rows,
        skipped_rows=data.skipped_rows,
        failed_samples=data.failed_samples,
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="render a spectral-curve sweep CSV as a static figure",
    )
    parser.add_argument("--csv", required=True, help="input sweep CSV")
    parser.add_argument("--out", required=True, help="output image (PNG/SVG)")
    parser.add_argument("--title", default="")
    parser.add_argument("--xlabel", default="a")
    parser.add_argument("--ylabel", default="lambda")
    parser.add_argument("--marker-size", type=float, default=4.0)
    ns = parser.parse_args(argv)
    spec = CurveFigureSpec(
        csv_path=ns.csv, out_path=ns.out, title=ns.title,
        xlabel=ns.xlabel, ylabel=ns.ylabel, marker_size=ns.marker_size,
    )
    try:
        report = render(spec)
    except CurveFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    line = (f"wrote {report.out_path}: {report.points_plotted} points from "
            f"{report.rows} rows")
    extras = []
    if report.skipped_rows:
        extras.append(f"{report.skipped_rows} malformed rows skipped")
    if report.failed_samples:
        extras.append(f"{report.failed_samples} failed samples")
    if extras:
        line += " (" + ", ".join(extras) + ")"
    print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
