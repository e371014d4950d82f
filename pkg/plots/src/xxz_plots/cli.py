"""`plot` command: render xxz-overlap CSVs to raster figures.

    plot overlap  --csv sweep.csv    --out figure.png [--x h2_minus]
                  [--series s_ed,s_thermo] [--title T] [--style rc.json]
    plot converge --csv converge.csv --out figure.png [--title T]

Nonzero exit on schema mismatch (the message carries the column diff) or on
empty requested series; no output file is written in that case.
"""

from __future__ import annotations

import argparse
import sys

from .figspec import FigureSpec, SchemaError
from .render import render_convergence_table, render_overlap_figure


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plot", description=__doc__.split("\n")[0])
    sp = ap.add_subparsers(dest="command", required=True)
    for name in ("overlap", "converge"):
        p = sp.add_parser(name)
        p.add_argument("--csv", required=True)
        p.add_argument("--out", required=True)
        p.add_argument("--title", default="")
        p.add_argument("--style", default=None)
        if name == "overlap":
            p.add_argument("--x", default="h2_minus")
            p.add_argument("--series", default="s_ed,s_thermo")
            p.add_argument("--vlines", default="",
                           help="extra comma-separated dashed guides")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "overlap":
            spec = FigureSpec(
                csv_path=args.csv, out_path=args.out, x_column=args.x,
                series=tuple(s for s in args.series.split(",") if s),
                vlines=tuple(float(v) for v in args.vlines.split(",") if v),
                title=args.title, xlabel=args.x, style=args.style)
            path = render_overlap_figure(spec)
            print(f"wrote {path}")
        else:
            spec = FigureSpec(csv_path=args.csv, out_path=args.out,
                              title=args.title, style=args.style)
            path, table = render_convergence_table(spec)
            print(table)
            print(f"wrote {path}")
        return 0
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"missing input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
